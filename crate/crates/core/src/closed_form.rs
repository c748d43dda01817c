//! The tableau-sum formula for `Δ^L(k;i)`.
//!
//! A tableau is an array `k^{(s)}_i` (`1 <= s <= m-m'`, `1 <= i <= d`) over `J`,
//! strictly increasing along each row `s`, weakly increasing down each column
//! `i`, and with the last entry of column `i` capped at `m'+i` when
//! `i <= r-m'`. Each tableau contributes a product of
//! `C̄(l,k) = Y[l,k-1]/Y[l,k]` and `C(l,k) = Y[l,k+1]/Y[l+1,k]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Monomial, VarSpace};
use crate::paths::{check_structure, Path, PathError, PathParams, PathVertex};
use crate::weyl_word::{fmt_tuple, CWord, JIndex, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error(transparent)]
    Params(#[from] PathError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("inadmissible tableau: {0}")]
    InadmissibleTableau(String),
    #[error("variable reference out of range: {0}")]
    Range(#[from] LaurentError),
}

/// Entries `k^{(s)}_i`, stored as `rows[s-1][i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub rows: Vec<Vec<JIndex>>,
}

impl Tableau {
    pub fn entry(&self, s: usize, i: usize) -> JIndex {
        self.rows[s - 1][i - 1]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// `δ_i`: number of unbarred entries in column `i`.
    pub fn delta(&self, i: usize) -> usize {
        self.rows.iter().filter(|row| !row[i - 1].is_barred()).count()
    }

    /// `l^{(s)}_i`.
    pub fn l(&self, s: usize, i: usize, r: u32) -> i64 {
        let k = self.entry(s, i);
        if s <= self.delta(i) {
            k.abs() as i64 + s as i64 - i as i64 - 1
        } else {
            s as i64 - i as i64 + r as i64
        }
    }

    /// Whether the tableau satisfies the defining inequalities.
    pub fn is_admissible(&self, p: &PathParams) -> bool {
        let (d, rows) = (p.d as usize, (p.m - p.mp) as usize);
        if self.rows.len() != rows || self.rows.iter().any(|row| row.len() != d) {
            return false;
        }
        for s in 1..=rows {
            for i in 1..=d {
                let k = self.entry(s, i);
                if !k.in_range(p.r) {
                    return false;
                }
                if i > 1 && self.entry(s, i - 1) >= k {
                    return false;
                }
                if s > 1 && self.entry(s - 1, i) > k {
                    return false;
                }
                if i as u32 + p.mp <= p.r && (k.is_barred() || k.abs() > p.mp + i as u32) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("({})", fmt_tuple(r))).collect();
        if rows.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", rows.join(";"))
        }
    }
}

fn cap(p: &PathParams, i: usize) -> JIndex {
    if i as u32 + p.mp <= p.r {
        JIndex::Plain(p.mp + i as u32)
    } else {
        JIndex::Bar(1)
    }
}

/// All admissible tableaux, lexicographic in row-major order.
pub fn enumerate_tableaux(d: u32, m: u32, mp: u32, r: u32) -> Result<Vec<Tableau>, ClosedFormError> {
    let p = PathParams::new(d, m, mp, r)?;
    Ok(enumerate_params(&p))
}

pub fn enumerate_params(p: &PathParams) -> Vec<Tableau> {
    let (d, rows) = (p.d as usize, (p.m - p.mp) as usize);
    let mut out = Vec::new();
    let mut cells: Vec<JIndex> = Vec::with_capacity(rows * d);
    fn rec(p: &PathParams, d: usize, rows: usize, cells: &mut Vec<JIndex>, out: &mut Vec<Tableau>) {
        let n = cells.len();
        if n == rows * d {
            out.push(Tableau { rows: cells.chunks(d).map(<[JIndex]>::to_vec).collect() });
            return;
        }
        let (s, i) = (n / d, n % d);
        let hi = cap(p, i + 1);
        for k in JIndex::all(p.r) {
            if k > hi {
                break;
            }
            if i > 0 && cells[n - 1] >= k {
                continue;
            }
            if s > 0 && cells[n - d] > k {
                continue;
            }
            // leave room for the strictly larger entries to the right
            if JIndex::all(p.r).filter(|&x| x > k).count() < d - 1 - i {
                continue;
            }
            cells.push(k);
            rec(p, d, rows, cells, out);
            cells.pop();
        }
    }
    rec(p, d, rows, &mut cells, &mut out);
    out
}

/// The factor of entry `(s, i)`: `C̄(m-l, k)` if unbarred, `C(m-l, |k|-1)` if barred.
fn entry_factor(t: &Tableau, s: usize, i: usize, p: &PathParams) -> Result<Monomial, ClosedFormError> {
    let vs = VarSpace::new(p.m, p.r);
    let k = t.entry(s, i);
    let c = p.m as i64 - t.l(s, i, p.r);
    let a = k.abs() as i64;
    Ok(if k.is_barred() {
        vs.ratio((c, a), (c + 1, a - 1))?
    } else {
        vs.ratio((c, a - 1), (c, a))?
    })
}

/// Human-readable factor list, e.g. `Cbar(3,1)C(1,2)`.
pub fn factor_names(t: &Tableau, p: &PathParams) -> String {
    let mut out = String::new();
    for i in 1..=p.d as usize {
        for s in 1..=t.num_rows() {
            let k = t.entry(s, i);
            let c = p.m as i64 - t.l(s, i, p.r);
            if k.is_barred() {
                out.push_str(&format!("C({},{})", c, k.abs() as i64 - 1));
            } else {
                out.push_str(&format!("Cbar({},{})", c, k.abs()));
            }
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

pub fn tableau_monomial(t: &Tableau, p: &PathParams) -> Result<Monomial, ClosedFormError> {
    if !t.is_admissible(p) {
        return Err(ClosedFormError::InadmissibleTableau(t.to_string()));
    }
    let mut q = Monomial::one();
    for i in 1..=p.d as usize {
        for s in 1..=t.num_rows() {
            q = &q * &entry_factor(t, s, i, p)?;
        }
    }
    Ok(q)
}

/// `Δ^L(k;i)` as the tableau sum.
pub fn minor_closed(w: &CWord, k: usize) -> Result<LaurentPoly, ClosedFormError> {
    let p = PathParams::for_position(w, k)?;
    let mut sum = LaurentPoly::zero();
    for t in enumerate_params(&p) {
        sum.add_term(1.into(), tableau_monomial(&t, &p)?);
    }
    Ok(sum)
}

/// Lines `tableau <-> factors = monomial`, one per tableau, then the total.
pub fn correspondence_table(w: &CWord, k: usize) -> Result<String, ClosedFormError> {
    let p = PathParams::for_position(w, k)?;
    let mut out = String::new();
    let mut total = LaurentPoly::zero();
    for t in enumerate_params(&p) {
        let q = tableau_monomial(&t, &p)?;
        out.push_str(&format!("{} <-> {} = {}\n", t, factor_names(&t, &p), LaurentPoly::from(q.clone())));
        total.add_term(1.into(), q);
    }
    out.push_str(&format!("sum = {}\n", total));
    Ok(out)
}

/// The tableau read off a path: column `i` records the stall levels (and, for
/// `i > r-m'`, the barred levels) of the `i`-th coordinate.
pub fn path_to_tableau(p: &PathParams, path: &Path) -> Result<Tableau, ClosedFormError> {
    let (d, m, mp, r) = (p.d as usize, p.m as usize, p.mp as usize, p.r as usize);
    let rows = m - mp;
    let mut cols: Vec<Vec<JIndex>> = Vec::with_capacity(d);
    for i in 1..=d {
        let a = path.i_sequence(i);
        let stall = |s: usize| !a[s].is_barred() && a[s] == a[s + 1];
        let ls: Vec<usize> = if i + mp <= r {
            (0..m).filter(|&s| stall(s)).collect()
        } else {
            (0..=m + r - i - mp).filter(|&s| stall(s) || a[s].is_barred()).collect()
        };
        if ls.len() != rows {
            return Err(ClosedFormError::InadmissibleTableau(format!("column {i} of {path}")));
        }
        cols.push(ls.iter().map(|&l| a[l]).collect());
    }
    Ok(Tableau { rows: (0..rows).map(|s| cols.iter().map(|c| c[s]).collect()).collect() })
}

/// The path rebuilt from a tableau: coordinate `i` climbs by one each level
/// except at the recorded stall levels, then runs through the barred entries
/// at their levels and ends at `\overline{d-i+1}`.
pub fn tableau_to_path(p: &PathParams, t: &Tableau) -> Result<Path, ClosedFormError> {
    if !t.is_admissible(p) {
        return Err(ClosedFormError::InadmissibleTableau(t.to_string()));
    }
    let (d, m, r) = (p.d as usize, p.m as usize, p.r);
    let mut seqs: Vec<Vec<JIndex>> = Vec::with_capacity(d);
    for i in 1..=d {
        let delta = t.delta(i);
        let mut stalls = Vec::new();
        let mut barred = BTreeMap::new();
        for s in 1..=t.num_rows() {
            let l = t.l(s, i, r);
            if l < 0 {
                return Err(ClosedFormError::InadmissibleTableau(t.to_string()));
            }
            if s <= delta {
                stalls.push(l as usize);
            } else {
                barred.insert(l as usize, t.entry(s, i));
            }
        }
        let mut a = vec![JIndex::Plain(i as u32)];
        for lev in 0..m {
            let cur = a[lev];
            let next = if let Some(&b) = barred.get(&(lev + 1)) {
                b
            } else if cur.is_barred() || (cur == JIndex::Plain(r) && !stalls.contains(&lev)) {
                JIndex::Bar((d + 1 - i) as u32)
            } else if stalls.contains(&lev) {
                cur
            } else {
                JIndex::Plain(cur.abs() + 1)
            };
            a.push(next);
        }
        seqs.push(a);
    }
    let path = Path {
        vertices: (0..=m).map(|s| PathVertex::new((m - s) as u32, seqs.iter().map(|a| a[s]).collect())).collect(),
    };
    let bad = check_structure(p, &path);
    if bad.contains(&"shape") {
        return Err(ClosedFormError::InadmissibleTableau(format!("{t} rebuilds to invalid {path}")));
    }
    Ok(path)
}
