//! Exchange matrices `B̃(i)`, matrix mutation, skew-symmetrizability and a
//! numeric exchange-relation check.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::laurent::VarIndex;
use crate::minors_oracle::{frozen_minor, minor_l_dp, MinorError};
use crate::rep::cartan;
use crate::weyl_word::CWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("{0} is not a column label")]
    BadDirection(i64),
    #[error("a cluster variable vanishes at this point")]
    DegeneratePoint,
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error("cannot evaluate: {0}")]
    Eval(String),
}

/// The exchangeable indices `[-1,-r] ∪ {k : i_k occurs again later}`.
pub fn e_set(w: &CWord) -> Vec<i64> {
    let letters = w.letters();
    let mut out: Vec<i64> = (1..=w.rank() as i64).map(|j| -j).collect();
    out.extend((0..letters.len()).filter(|&k| letters[k + 1..].contains(&letters[k])).map(|k| k as i64 + 1));
    out
}

/// All row labels `[-1,-r] ∪ [1,n]`.
pub fn row_labels(w: &CWord) -> Vec<i64> {
    let mut out: Vec<i64> = (1..=w.rank() as i64).map(|j| -j).collect();
    out.extend(1..=w.len() as i64);
    out
}

/// Integer matrix with labelled rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeMatrix {
    pub rows: Vec<i64>,
    pub cols: Vec<i64>,
    pub entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(rows: Vec<i64>, cols: Vec<i64>, entries: Vec<Vec<i64>>) -> Self {
        ExchangeMatrix { rows, cols, entries }
    }

    /// A square matrix labelled `1..=n` on both sides.
    pub fn square(entries: Vec<Vec<i64>>) -> Self {
        let labels: Vec<i64> = (1..=entries.len() as i64).collect();
        ExchangeMatrix { rows: labels.clone(), cols: labels, entries }
    }

    fn row_index(&self, label: i64) -> Option<usize> {
        self.rows.iter().position(|&x| x == label)
    }

    fn col_index(&self, label: i64) -> Option<usize> {
        self.cols.iter().position(|&x| x == label)
    }

    pub fn get(&self, row: i64, col: i64) -> Option<i64> {
        Some(self.entries[self.row_index(row)?][self.col_index(col)?])
    }

    /// Rows restricted to the column labels.
    pub fn principal_part(&self) -> Vec<Vec<i64>> {
        self.cols
            .iter()
            .map(|&c| {
                let i = self.row_index(c).expect("column labels are row labels");
                self.entries[i].clone()
            })
            .collect()
    }

    /// `μ_k`.
    pub fn mutate(&self, k: i64) -> Result<ExchangeMatrix, ClusterError> {
        let kc = self.col_index(k).ok_or(ClusterError::BadDirection(k))?;
        let kr = self.row_index(k).ok_or(ClusterError::BadDirection(k))?;
        let mut out = self.clone();
        for (i, row) in out.entries.iter_mut().enumerate() {
            for (j, b) in row.iter_mut().enumerate() {
                if i == kr || j == kc {
                    *b = -self.entries[i][j];
                } else {
                    let (bik, bkj) = (self.entries[i][kc], self.entries[kr][j]);
                    *b = self.entries[i][j] + (bik.abs() * bkj + bik * bkj.abs()) / 2;
                }
            }
        }
        Ok(out)
    }

    pub fn mutate_seq(&self, seq: &[i64]) -> Result<ExchangeMatrix, ClusterError> {
        seq.iter().try_fold(self.clone(), |m, &k| m.mutate(k))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// `k^+`: next position with the same letter, or `n+1`.
fn next_occurrence(letters: &[u32], k: i64) -> i64 {
    let n = letters.len() as i64;
    let (start, letter) = if k < 0 { (1, (-k) as u32) } else { (k + 1, letters[(k - 1) as usize]) };
    (start..=n).find(|&l| letters[(l - 1) as usize] == letter).unwrap_or(n + 1)
}

/// `B̃(i)`. Frozen labels `-j` carry letter `j`; every index is negative in
/// the signed word, so all sign factors `ε_p` equal `-1`.
pub fn build_btilde(w: &CWord) -> ExchangeMatrix {
    let letters = w.letters();
    let r = w.rank();
    let abs_letter = |k: i64| if k < 0 { (-k) as u32 } else { letters[(k - 1) as usize] };
    let rows = row_labels(w);
    let cols = e_set(w);
    let eps = -1i64;
    let entries = rows
        .iter()
        .map(|&k| {
            cols.iter()
                .map(|&l| {
                    let p = k.max(l);
                    let q = next_occurrence(&letters, k).min(next_occurrence(&letters, l));
                    let s = (k - l).signum();
                    if p == q {
                        -s * eps
                    } else if p < q && eps * eps * (k - l) * (next_occurrence(&letters, k) - next_occurrence(&letters, l)) > 0 {
                        -s * eps * cartan(abs_letter(k), abs_letter(l), r)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    ExchangeMatrix { rows, cols, entries }
}

/// `b_ij b_ji <= 0`, `b_ij = 0 ⇔ b_ji = 0`, zero diagonal.
pub fn is_sign_skew_symmetric(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    (0..n).all(|i| {
        m[i][i] == 0
            && (0..n).all(|j| {
                let (a, b) = (m[i][j], m[j][i]);
                a * b <= 0 && ((a == 0) == (b == 0))
            })
    })
}

/// A positive integer `D` with `D·M` skew-symmetric, if one exists.
pub fn is_skew_symmetrizable(m: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) || !is_sign_skew_symmetric(m) {
        return None;
    }
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                if m[i][j] == 0 {
                    continue;
                }
                // d_i b_ij = -d_j b_ji
                let dj = &di * BigRational::from_integer(BigInt::from(m[i][j]))
                    / BigRational::from_integer(BigInt::from(-m[j][i]));
                match &d[j] {
                    Some(x) if *x != dj => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("all visited")).collect();
    let lcm = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = d.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| i64::try_from(x / &g).ok()).collect()
}

/// Values of every `Δ(j;i)` (rows of `B̃`) at `point`.
pub fn cluster_values(
    w: &CWord,
    point: &BTreeMap<VarIndex, BigRational>,
) -> Result<BTreeMap<i64, BigRational>, ClusterError> {
    let mut out = BTreeMap::new();
    for label in row_labels(w) {
        let poly = if label < 0 { frozen_minor(w, (-label) as u32)? } else { minor_l_dp(w, label as usize)? };
        let v = poly.eval(point).map_err(|e| ClusterError::Eval(e.to_string()))?;
        if v.is_zero() {
            return Err(ClusterError::DegeneratePoint);
        }
        out.insert(label, v);
    }
    Ok(out)
}

/// Solves `x_k x_k' = Π_{b_jk>0} x_j^{b_jk} + Π_{b_jk<0} x_j^{-b_jk}` for `x_k'`
/// at `point` and reports whether it is non-zero.
pub fn exchange_check(w: &CWord, k: i64, point: &BTreeMap<VarIndex, BigRational>) -> Result<bool, ClusterError> {
    Ok(!exchange_value(w, k, point)?.is_zero())
}

pub fn exchange_value(
    w: &CWord,
    k: i64,
    point: &BTreeMap<VarIndex, BigRational>,
) -> Result<BigRational, ClusterError> {
    let b = build_btilde(w);
    if !b.cols.contains(&k) {
        return Err(ClusterError::BadDirection(k));
    }
    let x = cluster_values(w, point)?;
    let (mut pos, mut neg) = (BigRational::one(), BigRational::one());
    for &j in &b.rows {
        let e = b.get(j, k).expect("labels exist");
        let xj = &x[&j];
        for _ in 0..e.abs() {
            if e > 0 {
                pos *= xj;
            } else {
                neg *= xj;
            }
        }
    }
    Ok((pos + neg) / &x[&k])
}
