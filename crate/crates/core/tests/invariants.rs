use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use spgm::closed_form::{enumerate_params as tableaux, path_to_tableau, tableau_monomial, tableau_to_path};
use spgm::cluster::e_set;
use spgm::minors_oracle::{minor_l_dp, minor_l_oracle, u_wedge};
use spgm::paths::{enumerate_params, path_label, PathParams};
use spgm::rep::{RepOperator, WedgeVector};
use spgm::weyl_word::{CWord, JIndex};

fn words(max_r: u32) -> impl Iterator<Item = CWord> {
    (1..=max_r).flat_map(|r| {
        (1..=r).flat_map(move |m| (1..=r).map(move |last| CWord::new(r, m, last).expect("valid word")))
    })
}

#[test]
fn tableaux_and_paths_are_in_bijection() {
    for w in words(5) {
        for k in 1..=w.len() {
            let p = PathParams::for_position(&w, k).unwrap();
            let paths = enumerate_params(&p);
            let tabs = tableaux(&p);
            assert_eq!(paths.len(), tabs.len(), "{w} k={k}");
            let mut image = BTreeSet::new();
            for path in &paths {
                let t = path_to_tableau(&p, path).unwrap();
                assert!(t.is_admissible(&p), "{w} k={k}: {path} -> {t}");
                assert_eq!(tableau_to_path(&p, &t).unwrap(), *path, "{w} k={k}");
                assert_eq!(tableau_monomial(&t, &p).unwrap(), path_label(p.r, p.m, path).unwrap(), "{w} k={k}: {t}");
                image.insert(t);
            }
            assert_eq!(image, tabs.into_iter().collect::<BTreeSet<_>>(), "{w} k={k}");
        }
    }
}

#[test]
fn tableau_levels_are_in_range_and_ordered() {
    for w in words(5) {
        for k in 1..=w.len() {
            let p = PathParams::for_position(&w, k).unwrap();
            let (m, r, d) = (p.m as i64, p.r, p.d as usize);
            for t in tableaux(&p) {
                for s in 1..=t.num_rows() {
                    for i in 1..=d {
                        let l = t.l(s, i, r);
                        assert!((0..m).contains(&l), "{w} k={k}: {t} l({s},{i}) = {l}");
                        if i < d {
                            let next = t.l(s, i + 1, r);
                            if t.entry(s, i).is_barred() {
                                assert_eq!(l, next + 1, "{w} k={k}: {t} at ({s},{i})");
                            } else {
                                assert!(l <= next, "{w} k={k}: {t} at ({s},{i})");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn exchangeable_set_size() {
    for w in words(6) {
        let distinct: BTreeSet<u32> = w.letters().into_iter().collect();
        assert_eq!(e_set(&w).len(), w.len() + w.rank() as usize - distinct.len(), "{w}");
    }
}

#[test]
fn weyl_image_is_the_target_wedge() {
    for w in words(5) {
        for k in 1..=w.len() {
            let target = w.target_wedge(k).unwrap();
            assert_eq!(u_wedge(&w, k).unwrap(), WedgeVector::basis(w.rank(), &target), "{w} k={k}");
        }
    }
}

#[test]
fn recurrence_matches_oracle() {
    for w in words(4) {
        for k in 1..=w.len() {
            assert_eq!(minor_l_dp(&w, k).unwrap(), minor_l_oracle(&w, k).unwrap(), "{w} k={k}");
        }
    }
}

#[test]
fn lowering_factors_are_triangular() {
    let t = BigRational::new(5.into(), 3.into());
    for r in 1..=6 {
        for i in 1..=r {
            let x = RepOperator::x_minus(r, i, &t).unwrap();
            assert!(x.is_lower_triangular());
            for (pos, got) in x.diagonal().into_iter().enumerate() {
                let j = JIndex::from_position(pos, r);
                let inv = [JIndex::Plain(i), JIndex::Bar(i + 1)];
                let fwd = [JIndex::Plain(i + 1), JIndex::Bar(i)];
                let want = if i == r && j == JIndex::Plain(r) {
                    t.recip()
                } else if i == r && j == JIndex::Bar(r) {
                    t.clone()
                } else if i < r && inv.contains(&j) {
                    t.recip()
                } else if i < r && fwd.contains(&j) {
                    t.clone()
                } else {
                    BigRational::one()
                };
                assert_eq!(got, want, "r={r} i={i} at {j}");
            }
        }
    }
}
