//! Closed-form case tables, written out type by type.
//!
//! These are independent of the general solvers in [`crate::newton`] and
//! serve as reference values: the defect `Xi_sigma = mu^diamond - nu(b_max)`
//! and the subsets `J` for which the minimal-length members of the twisted
//! class of `zeta` are Coxeter elements of `W_J`.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::affine::FrobeniusDatum;
use crate::linalg::{frac, q, Q};
use crate::rootdata::{CoweightVector, TypeLetter};

fn odd_up_to(m: usize) -> impl Iterator<Item = usize> {
    (1..=m).filter(|j| j % 2 == 1)
}

/// `1 - {x}` when `x` is not an integer, else 0.
fn complement(x: Q) -> Q {
    let f = frac(&x);
    if f == q(0, 1) {
        f
    } else {
        q(1, 1) - f
    }
}

fn sigma0_order(d: &FrobeniusDatum) -> usize {
    d.sigma0.order()
}

/// Closed form of `Xi_sigma` in simple-coroot coordinates, when the case is
/// tabulated.
pub fn xi_closed_form(d: &FrobeniusDatum) -> Option<CoweightVector> {
    let n = d.rank;
    let mut x = vec![q(0, 1); n];
    let Some(i) = d.tau else {
        return Some(CoweightVector(x));
    };
    let half = q(1, 2);
    match (d.letter, sigma0_order(d)) {
        (TypeLetter::A, 1) => {
            for j in 1..=n {
                x[j - 1] = frac(&q((i * j) as i64, (n + 1) as i64));
            }
        }
        (TypeLetter::A, 2) => {
            if n % 2 == 1 && i % 2 == 1 {
                x[(n + 1) / 2 - 1] = half;
            }
        }
        (TypeLetter::B, 1) => x[n - 1] = half,
        (TypeLetter::C, 1) => {
            for j in odd_up_to(n) {
                x[j - 1] = half.clone();
            }
        }
        (TypeLetter::D, 1) if i == 1 => {
            x[n - 2] = half.clone();
            x[n - 1] = half;
        }
        (TypeLetter::D, 1) => {
            for j in odd_up_to(n - 2) {
                x[j - 1] = half.clone();
            }
            let (a, b) = (
                complement(q(n as i64 - 2, 4)),
                complement(q(n as i64, 4)),
            );
            // tau_{n-1} is the mirror image of tau_n
            let (a, b) = if i == n { (a, b) } else { (b, a) };
            x[n - 2] = a;
            x[n - 1] = b;
        }
        (TypeLetter::D, 2) if i == 1 => {}
        (TypeLetter::D, 2) => {
            for j in odd_up_to(n - 2) {
                x[j - 1] = half.clone();
            }
            if n % 2 == 0 {
                x[n - 2] = q(1, 4);
                x[n - 1] = q(1, 4);
            }
        }
        (TypeLetter::D, 3) => {}
        (TypeLetter::E, 1) if n == 6 => {
            let v = if i == 1 { [2, 0, 1, 0, 2, 1] } else { [1, 0, 2, 0, 1, 2] };
            for (slot, c) in x.iter_mut().zip(v) {
                *slot = q(c, 3);
            }
        }
        (TypeLetter::E, 2) => {}
        (TypeLetter::E, 1) if n == 7 => {
            for j in [2, 5, 7] {
                x[j - 1] = half.clone();
            }
        }
        _ => return None,
    }
    Some(CoweightVector(x))
}

/// Expected subsets `J`, when the case is tabulated. The empty set means the
/// identity lies in the twisted class of `zeta`.
pub fn expected_j_sets(d: &FrobeniusDatum) -> Option<Vec<BTreeSet<usize>>> {
    let n = d.rank;
    let Some(i) = d.tau else {
        return Some(vec![BTreeSet::new()]);
    };
    let set = |v: Vec<usize>| v.into_iter().collect::<BTreeSet<_>>();
    let odd = |m: usize| odd_up_to(m).collect::<Vec<_>>();
    let with = |mut v: Vec<usize>, extra: &[usize]| {
        v.extend_from_slice(extra);
        v
    };
    let out = match (d.letter, sigma0_order(d)) {
        (TypeLetter::A, 1) => {
            let g = (n + 1).gcd(&i);
            let k = (n + 1) / g;
            let mut j = Vec::new();
            for b in 0..g {
                j.extend(b * k + 1..b * k + k);
            }
            vec![set(j)]
        }
        (TypeLetter::A, 2) => {
            if n % 2 == 1 && i % 2 == 1 {
                vec![set(vec![(n + 1) / 2])]
            } else {
                vec![BTreeSet::new()]
            }
        }
        (TypeLetter::B, 1) => vec![set(vec![n])],
        (TypeLetter::C, 1) => vec![set(odd(n))],
        (TypeLetter::D, 1) if i == 1 => vec![set(vec![n - 1, n])],
        (TypeLetter::D, 1) => {
            let j = if n % 2 == 1 {
                with(odd(n - 2), &[n - 1, n])
            } else if n % 4 == 0 {
                odd(n)
            } else {
                with(odd(n - 2), &[n])
            };
            let j = if i == n {
                j
            } else {
                j.into_iter()
                    .map(|k| match k {
                        k if k == n => n - 1,
                        k if k == n - 1 => n,
                        k => k,
                    })
                    .collect()
            };
            vec![set(j)]
        }
        (TypeLetter::D, 2) if i == 1 => vec![BTreeSet::new()],
        (TypeLetter::D, 2) => {
            if n % 2 == 1 {
                vec![set(odd(n - 2))]
            } else {
                let mut v = vec![set(odd(n)), set(with(odd(n - 2), &[n]))];
                v.sort();
                v
            }
        }
        (TypeLetter::D, 3) => vec![BTreeSet::new()],
        (TypeLetter::E, 1) if n == 6 => vec![set(vec![1, 3, 5, 6])],
        (TypeLetter::E, 2) => vec![BTreeSet::new()],
        (TypeLetter::E, 1) if n == 7 => vec![set(vec![2, 5, 7])],
        _ => return None,
    };
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{CartanDatum, DiagramAutomorphism, RootSystem};

    fn datum(l: TypeLetter, n: usize, tau: usize, twisted: bool) -> FrobeniusDatum {
        let rs = RootSystem::new(l, n).unwrap();
        let s = if twisted {
            DiagramAutomorphism::flip(&CartanDatum::new(l, n).unwrap()).unwrap()
        } else {
            DiagramAutomorphism::identity(n)
        };
        FrobeniusDatum::new(&rs, Some(tau), s).unwrap()
    }

    #[test]
    fn a3_tau2() {
        let d = datum(TypeLetter::A, 3, 2, false);
        let xi = xi_closed_form(&d).unwrap();
        assert_eq!(xi.display_coroots(), "1/2 a1v + 1/2 a3v");
        assert_eq!(
            expected_j_sets(&d).unwrap(),
            vec![[1, 3].into_iter().collect::<BTreeSet<_>>()]
        );
    }

    #[test]
    fn d_tau_n_cases() {
        let d5 = datum(TypeLetter::D, 5, 5, false);
        assert_eq!(
            xi_closed_form(&d5).unwrap().display_coroots(),
            "1/2 a1v + 1/2 a3v + 1/4 a4v + 3/4 a5v"
        );
        let d4 = datum(TypeLetter::D, 4, 4, false);
        assert_eq!(
            xi_closed_form(&d4).unwrap().display_coroots(),
            "1/2 a1v + 1/2 a3v"
        );
        let d6 = datum(TypeLetter::D, 6, 6, false);
        assert_eq!(
            xi_closed_form(&d6).unwrap().display_coroots(),
            "1/2 a1v + 1/2 a3v + 1/2 a6v"
        );
        let twisted = datum(TypeLetter::D, 4, 4, true);
        assert_eq!(expected_j_sets(&twisted).unwrap().len(), 2);
    }
}
