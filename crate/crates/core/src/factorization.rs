//! The change of variables `φ` relating `a · x_{-i_1}(Y) ⋯ x_{-i_n}(Y)` to
//! `a' · y_{i_1}(Φ) ⋯ y_{i_n}(Φ)`, its inverse `ψ`, and exact matrix checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::laurent::VarIndex;
use crate::rep::{cartan, spow, RepError, RepOperator};
use crate::weyl_word::CWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("Y[{0},{1}] is zero")]
    ZeroValue(u32, u32),
    #[error("torus component {0} is zero")]
    ZeroTorus(usize),
    #[error("no value for Y[{0},{1}]")]
    Missing(u32, u32),
    #[error("torus has {got} components, expected {expected}")]
    TorusLength { expected: usize, got: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Values of `Y[s,l]` and a torus element `Π_l α_l^∨(c_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableAssignment {
    pub values: BTreeMap<VarIndex, BigRational>,
    pub torus: Vec<BigRational>,
}

impl VariableAssignment {
    fn check(&self, w: &CWord) -> Result<(), FactorError> {
        if self.torus.len() != w.rank() as usize {
            return Err(FactorError::TorusLength { expected: w.rank() as usize, got: self.torus.len() });
        }
        if let Some(i) = self.torus.iter().position(Zero::is_zero) {
            return Err(FactorError::ZeroTorus(i + 1));
        }
        for (s, l) in w.positions() {
            match self.values.get(&VarIndex::new(s, l)) {
                None => return Err(FactorError::Missing(s, l)),
                Some(v) if v.is_zero() => return Err(FactorError::ZeroValue(s, l)),
                Some(_) => {}
            }
        }
        Ok(())
    }

    /// `Y[s,l]`, reading `Y[s,0]` and the absent `Y[m,ξ]` (`ξ > last`) as 1.
    fn get(&self, s: u32, l: u32) -> BigRational {
        if l == 0 {
            return BigRational::one();
        }
        self.values.get(&VarIndex::new(s, l)).cloned().unwrap_or_else(BigRational::one)
    }

    pub fn y(&self, s: u32, l: u32) -> &BigRational {
        &self.values[&VarIndex::new(s, l)]
    }
}

/// Uniform random non-zero rationals `±p/q` with `1 <= p, q <= bound`.
pub fn random_assignment<R: Rng>(w: &CWord, rng: &mut R, bound: i64) -> VariableAssignment {
    let mut draw = || {
        let p: i64 = rng.gen_range(1..=bound);
        let q: i64 = rng.gen_range(1..=bound);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        BigRational::new(BigInt::from(sign * p), BigInt::from(q))
    };
    let values = w.positions().map(|(s, l)| (VarIndex::new(s, l), draw())).collect();
    let torus = (0..w.rank()).map(|_| draw()).collect();
    VariableAssignment { values, torus }
}

fn prod_range(v: &VariableAssignment, from: u32, to: u32, l: u32) -> BigRational {
    (from..=to).fold(BigRational::one(), |acc, z| acc * v.get(z, l))
}

/// `(numerator, P)` with `Φ_{s,l} = numerator / (Y[s,l] · P^2)`; both only
/// involve positions after `(s,l)`.
fn phi_parts(w: &CWord, v: &VariableAssignment, s: u32, l: u32) -> (BigRational, BigRational) {
    let (m, r) = (w.cycles(), w.rank());
    let p = prod_range(v, s + 1, m, l);
    let num = if l < r {
        prod_range(v, s + 1, m, l - 1) * prod_range(v, s, m, l + 1)
    } else {
        let q = prod_range(v, s + 1, m, r - 1);
        &q * &q
    };
    (num, p)
}

/// `φ`: `Φ_{s,l}` for every position, and `Φ_a = a · Π α_l^∨(Y[s,l])^{-1}`.
pub fn phi(w: &CWord, v: &VariableAssignment) -> Result<VariableAssignment, FactorError> {
    v.check(w)?;
    let mut values = BTreeMap::new();
    let mut torus = v.torus.clone();
    for (s, l) in w.positions() {
        let (num, p) = phi_parts(w, v, s, l);
        let y = v.y(s, l);
        values.insert(VarIndex::new(s, l), num / (y * &p * &p));
        torus[(l - 1) as usize] /= y;
    }
    Ok(VariableAssignment { values, torus })
}

/// `ψ = φ^{-1}`, solved position by position from the end of the word:
/// `Ψ_{s,l} = numerator(Ψ) / (Y[s,l] · P(Ψ)^2)`, then `Ψ_a = a · Π α_l^∨(Ψ_{s,l})`.
pub fn psi(w: &CWord, v: &VariableAssignment) -> Result<VariableAssignment, FactorError> {
    v.check(w)?;
    let mut out = VariableAssignment { values: BTreeMap::new(), torus: v.torus.clone() };
    let positions: Vec<(u32, u32)> = w.positions().collect();
    for &(s, l) in positions.iter().rev() {
        let (num, p) = phi_parts(w, &out, s, l);
        let val = num / (v.y(s, l) * &p * &p);
        out.torus[(l - 1) as usize] *= &val;
        out.values.insert(VarIndex::new(s, l), val);
    }
    Ok(out)
}

/// `a · x_{-i_1}(Y[1,i_1]) ⋯ x_{-i_n}(Y[m,i_n])`.
pub fn xbar_g(w: &CWord, v: &VariableAssignment) -> Result<RepOperator<BigRational>, FactorError> {
    v.check(w)?;
    let r = w.rank();
    let mut acc = RepOperator::torus(r, &v.torus)?;
    for (s, l) in w.positions() {
        acc = acc.compose(&RepOperator::x_minus(r, l, v.y(s, l))?);
    }
    Ok(acc)
}

/// `a · y_{i_1}(t_1) ⋯ y_{i_n}(t_n)`.
pub fn x_g(w: &CWord, v: &VariableAssignment) -> Result<RepOperator<BigRational>, FactorError> {
    v.check(w)?;
    let r = w.rank();
    let mut acc = RepOperator::torus(r, &v.torus)?;
    for (s, l) in w.positions() {
        acc = acc.compose(&RepOperator::y(r, l, v.y(s, l))?);
    }
    Ok(acc)
}

/// `x̄^G(v) = x^G(φ(v))` as exact `2r × 2r` matrices.
pub fn verify_factorization(w: &CWord, v: &VariableAssignment) -> Result<bool, FactorError> {
    Ok(xbar_g(w, v)? == x_g(w, &phi(w, v)?)?)
}

/// `α_i^∨(c)^{-1} y_j(t) = y_j(c^{a_ij} t) α_i^∨(c)^{-1}` as a matrix identity.
pub fn commutation_holds(r: u32, i: u32, j: u32, c: &BigRational, t: &BigRational) -> Result<bool, FactorError> {
    let ainv = RepOperator::coroot(r, i, &c.recip())?;
    let lhs = ainv.compose(&RepOperator::y(r, j, t)?);
    let scaled = spow(c, cartan(i, j, r) as i32)? * t;
    let rhs = RepOperator::y(r, j, &scaled)?.compose(&ainv);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn phi_last_position_is_reciprocal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (r, m, last) in [(3, 2, 3), (3, 3, 2), (2, 1, 1), (1, 1, 1)] {
            let w = CWord::new(r, m, last).unwrap();
            let v = random_assignment(&w, &mut rng, 9);
            let f = phi(&w, &v).unwrap();
            let key = VarIndex::new(m, last);
            assert_eq!(f.values[&key], v.values[&key].recip());
        }
    }

    #[test]
    fn phi_at_rank_position() {
        let w = CWord::new(3, 3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let v = random_assignment(&w, &mut rng, 7);
        let f = phi(&w, &v).unwrap();
        let num = v.y(2, 2) * v.y(3, 2);
        let p = v.y(2, 3) * v.y(3, 3);
        assert_eq!(f.values[&VarIndex::new(1, 3)], &num * &num / (v.y(1, 3) * &p * &p));
    }

    #[test]
    fn psi_inverts_phi() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let w = CWord::new(3, 2, 3).unwrap();
        for _ in 0..20 {
            let v = random_assignment(&w, &mut rng, 9);
            assert_eq!(psi(&w, &phi(&w, &v).unwrap()).unwrap(), v);
            assert_eq!(phi(&w, &psi(&w, &v).unwrap()).unwrap(), v);
        }
        let w1 = CWord::new(1, 1, 1).unwrap();
        let v = random_assignment(&w1, &mut rng, 9);
        assert_eq!(phi(&w1, &v).unwrap().values, psi(&w1, &v).unwrap().values);
    }

    #[test]
    fn factorization_and_negative_control() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let w = CWord::new(3, 2, 3).unwrap();
        let v = random_assignment(&w, &mut rng, 9);
        assert!(verify_factorization(&w, &v).unwrap());
        let mut bad = phi(&w, &v).unwrap();
        let key = VarIndex::new(1, 2);
        let x = bad.values[&key].clone();
        bad.values.insert(key, x.recip());
        assert_ne!(xbar_g(&w, &v).unwrap(), x_g(&w, &bad).unwrap());
        let w1 = CWord::new(1, 1, 1).unwrap();
        let v1 = VariableAssignment {
            values: [(VarIndex::new(1, 1), q(3, 2))].into_iter().collect(),
            torus: vec![q(-5, 7)],
        };
        assert!(verify_factorization(&w1, &v1).unwrap());
    }

    #[test]
    fn zero_values_rejected() {
        let w = CWord::new(1, 1, 1).unwrap();
        let v = VariableAssignment {
            values: [(VarIndex::new(1, 1), q(0, 1))].into_iter().collect(),
            torus: vec![q(1, 1)],
        };
        assert_eq!(phi(&w, &v), Err(FactorError::ZeroValue(1, 1)));
    }

    #[test]
    fn commutation_cases() {
        for r in 1..=4 {
            for i in 1..=r {
                for j in 1..=r {
                    assert!(commutation_holds(r, i, j, &q(3, 2), &q(-5, 7)).unwrap(), "r={r} i={i} j={j}");
                }
            }
        }
    }
}
