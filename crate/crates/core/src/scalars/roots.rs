//! Registry of formal square roots.

use super::gauss::GaussScalar;
use super::ScalarError;
use once_cell::sync::Lazy;
use std::sync::RwLock;

/// Index of a registered root symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootId(pub u32);

/// Ordered list of `(name, defining square)` pairs.
#[derive(Clone, Debug, Default)]
pub struct RootRegistry {
    entries: Vec<(String, GaussScalar)>,
}

impl RootRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register a new symbol. Names are unique and squares nonzero.
    pub fn register(&mut self, name: &str, square: GaussScalar) -> Result<RootId, ScalarError> {
        if square.is_zero() {
            return Err(ScalarError::ZeroSquare(name.to_string()));
        }
        if !is_valid_name(name) {
            return Err(ScalarError::BadRootName(name.to_string()));
        }
        if self.lookup(name).is_some() {
            return Err(ScalarError::DuplicateRoot(name.to_string()));
        }
        self.entries.push((name.to_string(), square));
        Ok(RootId(self.entries.len() as u32 - 1))
    }

    pub fn lookup(&self, name: &str) -> Option<RootId> {
        self.entries.iter().position(|(n, _)| n == name).map(|i| RootId(i as u32))
    }

    pub fn name(&self, id: RootId) -> &str {
        &self.entries[id.0 as usize].0
    }

    pub fn square(&self, id: RootId) -> &GaussScalar {
        &self.entries[id.0 as usize].1
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

const RESERVED: &[&str] = &["s", "q", "i", "a", "c", "as", "cs", "E", "F", "K"];

fn is_valid_name(name: &str) -> bool {
    let mut ch = name.chars();
    let first_ok = ch.next().is_some_and(|c| c.is_ascii_alphabetic());
    first_ok
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&name)
        && !name.starts_with('w')
}

static GLOBAL: Lazy<RwLock<RootRegistry>> = Lazy::new(|| RwLock::new(RootRegistry::new()));

/// Register `name` in the process-wide registry. Re-registering the same name with
/// the same square returns the existing id.
pub fn register_root(name: &str, square: GaussScalar) -> Result<RootId, ScalarError> {
    let mut reg = GLOBAL.write().expect("root registry poisoned");
    if let Some(id) = reg.lookup(name) {
        if reg.square(id) == &square {
            return Ok(id);
        }
        return Err(ScalarError::DuplicateRoot(name.to_string()));
    }
    reg.register(name, square)
}

/// Register a root with the given square under `base`, or `base_2`, `base_3`, ... if
/// `base` is already taken by a different square. Equal squares share one symbol.
pub fn fresh_root(base: &str, square: GaussScalar) -> Result<RootId, ScalarError> {
    let mut reg = GLOBAL.write().expect("root registry poisoned");
    let mut k = 1usize;
    loop {
        let name = if k == 1 { base.to_string() } else { format!("{}_{}", base, k) };
        match reg.lookup(&name) {
            Some(id) if reg.square(id) == &square => return Ok(id),
            Some(_) => k += 1,
            None => return reg.register(&name, square),
        }
    }
}

pub fn root_name(id: RootId) -> String {
    GLOBAL.read().expect("root registry poisoned").name(id).to_string()
}

pub fn root_square(id: RootId) -> GaussScalar {
    GLOBAL.read().expect("root registry poisoned").square(id).clone()
}

pub fn lookup_root(name: &str) -> Option<RootId> {
    GLOBAL.read().expect("root registry poisoned").lookup(name)
}

/// Snapshot of the global registry.
pub fn registry_snapshot() -> RootRegistry {
    GLOBAL.read().expect("root registry poisoned").clone()
}
