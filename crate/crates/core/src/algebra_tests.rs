use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Word-rewriting oracle: repeatedly rewrite the leftmost out-of-order pair.
fn oracle_normal_form(word: &[Gen]) -> AlgElement {
    let mut todo: Vec<(Vec<Gen>, Scalar)> = vec![(word.to_vec(), Scalar::one())];
    let mut done = AlgElement::zero();
    while let Some((w, c)) = todo.pop() {
        let pos = w.windows(2).position(|p| {
            matches!(
                (p[0], p[1]),
                (Gen::C, Gen::A)
                    | (Gen::CStar, Gen::A)
                    | (Gen::C, Gen::AStar)
                    | (Gen::CStar, Gen::AStar)
                    | (Gen::CStar, Gen::C)
                    | (Gen::AStar, Gen::A)
                    | (Gen::A, Gen::AStar)
            )
        });
        let Some(i) = pos else {
            let mut m = Monomial::ONE;
            for g in &w {
                match g {
                    Gen::A => m.apow += 1,
                    Gen::AStar => m.apow -= 1,
                    Gen::C => m.ec += 1,
                    Gen::CStar => m.ecs += 1,
                }
            }
            done.add_term(m, c);
            continue;
        };
        let splice = |mid: &[Gen]| {
            let mut v = w[..i].to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(&w[i + 2..]);
            v
        };
        match (w[i], w[i + 1]) {
            (Gen::C, Gen::A) => todo.push((splice(&[Gen::A, Gen::C]), &c * &Scalar::q_pow(-1))),
            (Gen::CStar, Gen::A) => todo.push((splice(&[Gen::A, Gen::CStar]), &c * &Scalar::q_pow(-1))),
            (Gen::C, Gen::AStar) => todo.push((splice(&[Gen::AStar, Gen::C]), &c * &Scalar::q())),
            (Gen::CStar, Gen::AStar) => todo.push((splice(&[Gen::AStar, Gen::CStar]), &c * &Scalar::q())),
            (Gen::CStar, Gen::C) => todo.push((splice(&[Gen::C, Gen::CStar]), c)),
            (Gen::AStar, Gen::A) => {
                todo.push((splice(&[]), c.clone()));
                todo.push((splice(&[Gen::C, Gen::CStar]), -c));
            }
            (Gen::A, Gen::AStar) => {
                todo.push((splice(&[]), c.clone()));
                todo.push((splice(&[Gen::C, Gen::CStar]), -(&c * &Scalar::q_pow(2))));
            }
            _ => unreachable!(),
        }
    }
    done
}

const GENS: [Gen; 4] = [Gen::A, Gen::AStar, Gen::C, Gen::CStar];

fn all_words(max_len: usize) -> Vec<Vec<Gen>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in GENS {
                let mut v: Vec<Gen> = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn product_of(word: &[Gen]) -> AlgElement {
    word.iter().fold(AlgElement::one(), |acc, g| acc * AlgElement::gen(*g))
}

fn random_element(rng: &mut ChaCha8Rng, deg: u32) -> AlgElement {
    let monos = Monomial::up_to_degree(deg);
    let mut x = AlgElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = monos[rng.gen_range(0..monos.len())];
        let c = Scalar::from_int(rng.gen_range(-3..=3)) + Scalar::q_pow(rng.gen_range(-1..=1));
        x.add_term(m, c);
    }
    x
}

#[test]
fn multiply_examples() {
    let (a, ast, c) = (AlgElement::a(), AlgElement::astar(), AlgElement::c());
    let ccs = AlgElement::monomial(Monomial { apow: 0, ec: 1, ecs: 1 });
    assert_eq!(&a * &ast, AlgElement::one() - ccs.scale(&Scalar::q_pow(1).pow(2)));
    assert_eq!(&c * &a, (&a * &c).scale(&Scalar::q_pow(-1)));
    let acc = AlgElement::monomial(Monomial { apow: 1, ec: 1, ecs: 1 });
    assert_eq!(&ast * &(&a * &a), &a - &acc.scale(&Scalar::q_pow(-2)));
}

#[test]
fn product_matches_rewriting_oracle() {
    for w in all_words(4) {
        assert_eq!(product_of(&w), oracle_normal_form(&w), "word {:?}", w);
    }
}

#[test]
fn bracketings_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let len = rng.gen_range(1..=5);
        let w: Vec<Gen> = (0..len).map(|_| GENS[rng.gen_range(0..4)]).collect();
        let split = rng.gen_range(0..=len);
        let left = product_of(&w[..split]) * product_of(&w[split..]);
        let right = w.iter().rev().fold(AlgElement::one(), |acc, g| AlgElement::gen(*g) * acc);
        assert_eq!(left, right);
    }
}

type Triple = BTreeMap<(Monomial, Monomial, Monomial), Scalar>;

fn add3(t: &mut Triple, k: (Monomial, Monomial, Monomial), c: Scalar) {
    let e = t.entry(k).or_default();
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

#[test]
fn hopf_axioms_low_degree() {
    for m in Monomial::up_to_degree(3) {
        let x = AlgElement::monomial(m);
        let dx = x.coproduct();
        // coassociativity
        let mut left = Triple::new();
        let mut right = Triple::new();
        for ((l, r), c) in dx.terms() {
            for ((l1, l2), c2) in AlgElement::monomial(*l).coproduct().terms() {
                add3(&mut left, (*l1, *l2, *r), c * c2);
            }
            for ((r1, r2), c2) in AlgElement::monomial(*r).coproduct().terms() {
                add3(&mut right, (*l, *r1, *r2), c * c2);
            }
        }
        assert_eq!(left, right, "coassociativity on {}", m);
        // counit
        assert_eq!(dx.apply_left(|l| AlgElement::monomial(*l).counit()), x);
        assert_eq!(dx.apply_right(|r| AlgElement::monomial(*r).counit()), x);
        // antipode
        let eps = AlgElement::from_scalar(x.counit());
        assert_eq!(dx.contract(|u| u.antipode(), |v| v.clone()), eps, "S⊗id on {}", m);
        assert_eq!(dx.contract(|u| u.clone(), |v| v.antipode()), eps, "id⊗S on {}", m);
    }
}

#[test]
fn coproduct_examples() {
    let expected = AlgTensor::simple(&AlgElement::c(), &AlgElement::a()).add(&AlgTensor::simple(&AlgElement::astar(), &AlgElement::c()));
    assert_eq!(AlgElement::c().coproduct(), expected);
    assert_eq!(AlgElement::c().antipode(), AlgElement::c().scale(&-Scalar::q()));
    let ac = AlgElement::a() * AlgElement::c();
    assert_eq!(ac.coproduct(), AlgElement::a().coproduct().mul(&AlgElement::c().coproduct()));
}

#[test]
fn star_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let x = random_element(&mut rng, 2);
        let y = random_element(&mut rng, 2);
        assert_eq!(x.star().star(), x);
        assert_eq!((&x * &y).star(), y.star() * x.star());
    }
    for g in GENS {
        let x = AlgElement::gen(g);
        assert_eq!(x.star().antipode().star().antipode(), x);
    }
}

#[test]
fn haar_values_and_invariance() {
    assert!(AlgElement::one().haar().is_one());
    let ccs2 = AlgElement::monomial(Monomial { apow: 0, ec: 2, ecs: 2 });
    let expected = (Scalar::one() + Scalar::q_pow(1) * Scalar::q_pow(1) + Scalar::q_pow(4)).inv().unwrap();
    assert_eq!(ccs2.haar(), expected);
    assert!(AlgElement::a().haar().is_zero());
    for m in Monomial::up_to_degree(4) {
        let x = AlgElement::monomial(m);
        let h = AlgElement::from_scalar(x.haar());
        let dx = x.coproduct();
        assert_eq!(dx.apply_right(|r| AlgElement::monomial(*r).haar()), h, "(id⊗h)Δ on {}", m);
        assert_eq!(dx.apply_left(|l| AlgElement::monomial(*l).haar()), h, "(h⊗id)Δ on {}", m);
    }
}

#[test]
fn haar_positive_at_sample_point() {
    let s0 = BigRational::new(BigInt::from(9), BigInt::from(10));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let x = random_element(&mut rng, 2);
        let v = (x.star() * x).haar().eval(&s0).unwrap();
        assert!(v.re > BigRational::from_integer(0.into()) && v.im == BigRational::from_integer(0.into()));
    }
}

#[test]
fn grades() {
    assert_eq!(AlgElement::a().grade(), Ok(-1));
    assert_eq!((AlgElement::cstar() * AlgElement::astar()).grade(), Ok(2));
    assert_eq!((AlgElement::a() + AlgElement::cstar()).grade(), Err(AlgebraError::Inhomogeneous));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let monos = Monomial::up_to_degree(3);
    for _ in 0..30 {
        let x = AlgElement::monomial(monos[rng.gen_range(0..monos.len())]);
        let y = AlgElement::monomial(monos[rng.gen_range(0..monos.len())]);
        assert_eq!((&x * &y).grade().unwrap(), x.grade().unwrap() + y.grade().unwrap());
    }
}
