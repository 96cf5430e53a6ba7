//! Run configuration. Everything that can fail is resolved here, before any check runs.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::str::FromStr;
use suq2::bundle::{ket, Ket};
use suq2::laplacians::dirac_nu;
use suq2::{ContractionParams, Scalar, SphereHodge};
use thiserror::Error;

use crate::parse::{parse_scalar, ParseError};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("--{flag}: {source}")]
    Parse { flag: &'static str, source: ParseError },
    #[error("--n-range: expected a..b with a <= b, got {0:?}")]
    NRange(String),
    #[error("--s0: expected a rational in (0, 1), got {0:?}")]
    S0(String),
    #[error("contraction parameters rejected: {0}")]
    Params(#[from] suq2::HodgeError),
    #[error("sphere hodge data: {0}")]
    Sphere(#[from] suq2::SphereError),
    #[error("line bundle n = {n}: {source}")]
    Bundle { n: i64, source: suq2::BundleError },
}

/// Raw flag values, before validation.
#[derive(Clone, Debug, Default)]
pub struct ConfigInput {
    pub alpha: Option<String>,
    pub eps: Option<String>,
    pub n_range: Option<String>,
    pub deg_max: Option<u32>,
    pub witness_deg: Option<u32>,
    pub s0: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub alpha: Scalar,
    pub eps: Scalar,
    pub n_min: i64,
    pub n_max: i64,
    pub deg_max: u32,
    pub witness_deg: u32,
    pub s0: BigRational,
}

pub fn default_alpha() -> Scalar {
    Scalar::q_pow(-1).div(&Scalar::from_int(2)).expect("nonzero")
}

/// `ε` back-solved from the first reality constraint at `ν = q⁻²(q−q⁻¹)⁴`.
pub fn default_eps() -> Scalar {
    -(Scalar::from_int(2) * dirac_nu()).div(&(Scalar::q_pow(2) - Scalar::q_pow(-2))).expect("nonzero")
}

pub fn parse_n_range(text: &str) -> Result<(i64, i64), ConfigError> {
    let bad = || ConfigError::NRange(text.to_string());
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn parse_s0(text: &str) -> Result<BigRational, ConfigError> {
    let bad = || ConfigError::S0(text.to_string());
    let r = BigRational::from_str(text.trim()).map_err(|_| bad())?;
    let zero = BigRational::from_integer(BigInt::from(0));
    let one = BigRational::from_integer(BigInt::from(1));
    if r <= zero || r >= one {
        return Err(bad());
    }
    Ok(r)
}

impl Config {
    pub fn from_input(input: &ConfigInput) -> Result<Config, ConfigError> {
        let scalar = |flag: &'static str, v: &Option<String>, dflt: fn() -> Scalar| match v {
            Some(t) => parse_scalar(t).map_err(|source| ConfigError::Parse { flag, source }),
            None => Ok(dflt()),
        };
        let (n_min, n_max) = match &input.n_range {
            Some(t) => parse_n_range(t)?,
            None => (-2, 2),
        };
        let s0 = match &input.s0 {
            Some(t) => parse_s0(t)?,
            None => BigRational::new(BigInt::from(9), BigInt::from(10)),
        };
        Ok(Config {
            alpha: scalar("alpha", &input.alpha, default_alpha)?,
            eps: scalar("eps", &input.eps, default_eps)?,
            n_min,
            n_max,
            deg_max: input.deg_max.unwrap_or(3),
            witness_deg: input.witness_deg.unwrap_or(2),
            s0,
        })
    }

    pub fn n_values(&self) -> impl Iterator<Item = i64> {
        self.n_min..=self.n_max
    }
}

/// Everything a check may read. Built sequentially so formal roots are registered (and
/// named) in a fixed order, which keeps renderings identical across runs.
pub struct Context {
    pub cfg: Config,
    pub params: ContractionParams,
    pub sphere: SphereHodge,
    pub kets: BTreeMap<i64, Ket>,
}

impl Context {
    pub fn new(cfg: Config, with_kets: bool) -> Result<Context, ConfigError> {
        let params = ContractionParams::derive(cfg.alpha.clone(), cfg.eps.clone())?;
        let sphere = SphereHodge::new(params.clone())?;
        let mut kets = BTreeMap::new();
        if with_kets {
            for n in cfg.n_values() {
                kets.insert(n, ket(n).map_err(|source| ConfigError::Bundle { n, source })?);
            }
        }
        Ok(Context { cfg, params, sphere, kets })
    }
}
