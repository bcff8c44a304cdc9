//! The extended affine Weyl group `P^vee x| W` of an adjoint root datum.
//!
//! An element `t^lambda w` stores `lambda` through its pairings
//! `<alpha_i, lambda>` with the simple roots (its coordinates in the basis of
//! fundamental coweights), so membership in `P^vee` holds by construction.
//! Rational coroot coordinates appear only at the boundaries.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, qi, Q};
use crate::qbg::Qbg;
use crate::rootdata::{
    AffineDiagramAutomorphism, CoweightVector, DiagramAutomorphism, RootSystem, TypeLetter,
    MAX_RANK,
};
use crate::weyl::{Weyl, WeylElement};

pub type Pairings = [i64; MAX_RANK];

/// `t^lambda w` with `lambda` in the coweight lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineElement {
    lambda: Pairings,
    w: WeylElement,
}

impl AffineElement {
    /// `lambda` is given by its pairings with the simple roots.
    pub fn new(lambda: &[i64], w: WeylElement) -> Self {
        let mut l = [0; MAX_RANK];
        l[..lambda.len()].copy_from_slice(lambda);
        AffineElement { lambda: l, w }
    }

    pub fn rank(&self) -> usize {
        self.w.rank()
    }

    /// Pairings `<alpha_i, lambda>` of the translation part.
    pub fn pairings(&self) -> &[i64] {
        &self.lambda[..self.rank()]
    }

    pub fn finite_part(&self) -> &WeylElement {
        &self.w
    }

    pub fn is_translation(&self) -> bool {
        self.w.is_identity()
    }
}

/// JSON form of an affine element. `lambda` is in simple-coroot coordinates
/// (as `[num, den]` pairs); the element equals `s_{word[0]} s_{word[1]} ...
/// tau_omega`, with `omega = 0` meaning the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineJson {
    pub lambda: Vec<[i64; 2]>,
    pub finite_word: Vec<usize>,
    pub word: Vec<usize>,
    pub omega: usize,
    pub length: usize,
}

/// The Frobenius `sigma = Ad(tau sigma_0)` on the extended affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusDatum {
    #[serde(rename = "type")]
    pub letter: TypeLetter,
    pub rank: usize,
    /// Index `i` of `tau_i`; `None` for the quasi-split case.
    pub tau: Option<usize>,
    pub sigma0: DiagramAutomorphism,
}

impl FrobeniusDatum {
    pub fn new(rs: &RootSystem, tau: Option<usize>, sigma0: DiagramAutomorphism) -> Result<Self> {
        if sigma0.rank() != rs.rank() {
            return Err(Error::Dimension {
                expected: rs.rank(),
                got: sigma0.rank(),
            });
        }
        if let Some(i) = tau {
            rs.check_label(i)?;
            if !rs.is_minuscule(i) {
                return Err(Error::NotMinuscule(i));
            }
        }
        Ok(FrobeniusDatum {
            letter: rs.letter(),
            rank: rs.rank(),
            tau,
            sigma0,
        })
    }

    pub fn split(rs: &RootSystem, tau: Option<usize>) -> Result<Self> {
        Self::new(rs, tau, DiagramAutomorphism::identity(rs.rank()))
    }

    pub fn is_quasi_split(&self) -> bool {
        self.tau.is_none()
    }

    /// E.g. `A3 tau2`, `2D5 tau5`, `3D4`.
    pub fn name(&self) -> String {
        let order = self.sigma0.order();
        let prefix = if order > 1 { order.to_string() } else { String::new() };
        match self.tau {
            Some(i) => format!("{prefix}{}{} tau{i}", self.letter, self.rank),
            None => format!("{prefix}{}{}", self.letter, self.rank),
        }
    }
}

/// Generic Newton point read off from twisted Demazure powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericNewtonPoint {
    /// Newton point in simple-coroot coordinates.
    pub nu: CoweightVector,
    /// `lim l(w^{*sigma,n}) / n`.
    pub two_rho_pairing: Q,
    /// Number of periods of length `o(sigma)` computed before stabilising.
    pub periods: usize,
}

#[derive(Debug, Clone)]
pub struct AffineWeyl {
    weyl: Weyl,
}

/// Cap on the number of periods examined by the Newton point iteration.
pub const MAX_NEWTON_PERIODS: usize = 64;

impl AffineWeyl {
    pub fn new(weyl: Weyl) -> Self {
        AffineWeyl { weyl }
    }

    pub fn of_type(letter: TypeLetter, rank: usize) -> Result<Self> {
        Ok(Self::new(Weyl::of_type(letter, rank)?))
    }

    pub fn weyl(&self) -> &Weyl {
        &self.weyl
    }

    pub fn root_system(&self) -> &RootSystem {
        self.weyl.root_system()
    }

    pub fn rank(&self) -> usize {
        self.weyl.rank()
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::new(&[], self.weyl.identity())
    }

    pub fn translation(&self, pairings: &[i64]) -> AffineElement {
        AffineElement::new(pairings, self.weyl.identity())
    }

    /// `t^lambda` for `lambda` in simple-coroot coordinates; rejected unless
    /// `lambda` lies in the coweight lattice.
    pub fn translation_coweight(&self, lambda: &CoweightVector) -> Result<AffineElement> {
        if lambda.rank() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        Ok(self.translation(&self.root_system().integral_pairings(lambda)?))
    }

    pub fn finite(&self, w: WeylElement) -> AffineElement {
        AffineElement::new(&[], w)
    }

    /// `x t^mu y`.
    pub fn from_parts(&self, x: &WeylElement, mu: &[i64], y: &WeylElement) -> AffineElement {
        AffineElement::new(&self.weyl.act_on_pairings(x, mu), x.mul(y))
    }

    /// Translation part in simple-coroot coordinates.
    pub fn translation_coroots(&self, a: &AffineElement) -> CoweightVector {
        self.root_system().coweight_from_pairings(a.pairings())
    }

    pub fn mul(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let moved = self.weyl.act_on_pairings(&a.w, b.pairings());
        let lambda: Vec<i64> = a.pairings().iter().zip(&moved).map(|(x, y)| x + y).collect();
        AffineElement::new(&lambda, a.w.mul(&b.w))
    }

    pub fn inverse(&self, a: &AffineElement) -> AffineElement {
        let winv = a.w.inverse();
        let moved: Vec<i64> = self
            .weyl
            .act_on_pairings(&winv, a.pairings())
            .into_iter()
            .map(|x| -x)
            .collect();
        AffineElement::new(&moved, winv)
    }

    /// Iwahori-Matsumoto length:
    /// `sum_{alpha > 0, w^{-1} alpha > 0} |<alpha, lambda>| +
    ///  sum_{alpha > 0, w^{-1} alpha < 0} |<alpha, lambda> - 1|`.
    pub fn length(&self, a: &AffineElement) -> usize {
        let rs = self.root_system();
        let mut total = 0i64;
        for (root, coroot) in rs.positive_roots.iter().zip(&rs.positive_coroots) {
            let p: i64 = root.iter().zip(a.pairings()).map(|(r, l)| r * l).sum();
            total += if a.w.inverse_sends_negative(coroot) {
                (p - 1).abs()
            } else {
                p.abs()
            };
        }
        total as usize
    }

    /// Affine simple reflection `s_k`, `0 <= k <= n`, with
    /// `s_0 = t^{theta^vee} s_theta`.
    pub fn simple_reflection(&self, k: usize) -> AffineElement {
        if k == 0 {
            let rs = self.root_system();
            let theta_pairings = self.coroot_pairings(rs.theta_check());
            AffineElement::new(&theta_pairings, self.weyl.reflection(rs.highest_root))
        } else {
            self.finite(self.weyl.generator(k))
        }
    }

    /// Pairings `<alpha_i, c>` of an integer vector in coroot coordinates.
    pub fn coroot_pairings(&self, c: &[i64]) -> Vec<i64> {
        let a = self.root_system().cartan();
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| a[i][j] * c[j]).sum())
            .collect()
    }

    /// Product of affine simple reflections, labels `0..=n`.
    pub fn from_affine_word(&self, word: &[usize]) -> Result<AffineElement> {
        let mut a = self.identity();
        for &k in word {
            if k > self.rank() {
                return Err(Error::LabelOutOfRange {
                    label: k,
                    lo: 0,
                    hi: self.rank(),
                });
            }
            a = self.mul(&a, &self.simple_reflection(k));
        }
        Ok(a)
    }

    /// `tau_i = t^{varpi_i^vee} w_{i,0} w_0` for minuscule `varpi_i^vee`.
    pub fn tau(&self, i: usize) -> Result<AffineElement> {
        let zeta = self.weyl.zeta(i)?;
        let mut e = vec![0; self.rank()];
        e[i - 1] = 1;
        Ok(AffineElement::new(&e, zeta))
    }

    /// The length-zero elements: `(0, 1)` followed by `(i, tau_i)` for each
    /// minuscule `i`.
    pub fn omega(&self) -> Vec<(usize, AffineElement)> {
        let mut out = vec![(0, self.identity())];
        for i in self.root_system().minuscule_coweight_indices() {
            out.push((i, self.tau(i).expect("minuscule")));
        }
        out
    }

    /// Index `i` with `a = tau_i` (0 for the identity), if `a` has length 0.
    pub fn omega_index(&self, a: &AffineElement) -> Option<usize> {
        self.omega().into_iter().find(|(_, t)| t == a).map(|(i, _)| i)
    }

    /// `a = s_{j_1} ... s_{j_k} omega` with `k = l(a)`, found by stripping
    /// left descents (smallest label first).
    pub fn left_decomposition(&self, a: &AffineElement) -> (Vec<usize>, AffineElement) {
        let refl: Vec<AffineElement> = (0..=self.rank()).map(|k| self.simple_reflection(k)).collect();
        let mut cur = *a;
        let mut l = self.length(&cur);
        let mut word = Vec::with_capacity(l);
        'outer: while l > 0 {
            for (k, s) in refl.iter().enumerate() {
                let next = self.mul(s, &cur);
                let ln = self.length(&next);
                if ln < l {
                    word.push(k);
                    cur = next;
                    l = ln;
                    continue 'outer;
                }
            }
            unreachable!("positive length element without a left descent");
        }
        (word, cur)
    }

    /// `a = omega s_{i_1} ... s_{i_k}` with `k = l(a)`.
    pub fn right_decomposition(&self, a: &AffineElement) -> (AffineElement, Vec<usize>) {
        let refl: Vec<AffineElement> = (0..=self.rank()).map(|k| self.simple_reflection(k)).collect();
        let mut cur = *a;
        let mut l = self.length(&cur);
        let mut word = Vec::with_capacity(l);
        'outer: while l > 0 {
            for (k, s) in refl.iter().enumerate() {
                let next = self.mul(&cur, s);
                let ln = self.length(&next);
                if ln < l {
                    word.push(k);
                    cur = next;
                    l = ln;
                    continue 'outer;
                }
            }
            unreachable!("positive length element without a right descent");
        }
        word.reverse();
        (cur, word)
    }

    /// Demazure product computed by folding a reduced word of `a` into `b`
    /// from the left: `omega * b = omega b`, then `s * c` is `s c` if that is
    /// longer and `c` otherwise.
    pub fn demazure_left_fold(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let (word, omega) = self.left_decomposition(a);
        let mut cur = self.mul(&omega, b);
        let mut l = self.length(&cur);
        for &k in word.iter().rev() {
            let next = self.mul(&self.simple_reflection(k), &cur);
            let ln = self.length(&next);
            if ln > l {
                cur = next;
                l = ln;
            }
        }
        cur
    }

    /// Mirror image of [`Self::demazure_left_fold`], folding a reduced word
    /// of `b` into `a` from the right.
    pub fn demazure_right_fold(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let (omega, word) = self.right_decomposition(b);
        let mut cur = self.mul(a, &omega);
        let mut l = self.length(&cur);
        for &k in &word {
            let next = self.mul(&cur, &self.simple_reflection(k));
            let ln = self.length(&next);
            if ln > l {
                cur = next;
                l = ln;
            }
        }
        cur
    }

    /// Demazure product `a * b`, folding whichever factor is shorter.
    pub fn demazure(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        if self.length(a) <= self.length(b) {
            self.demazure_left_fold(a, b)
        } else {
            self.demazure_right_fold(a, b)
        }
    }

    /// `x1 t^{mu1} y1 * x2 t^{mu2} y2 = x1 t^{mu1 + mu2 - wt(y1^{-1}, x2)} y2`
    /// for dominant `mu1, mu2` of depth at least 2 (given as pairings).
    pub fn demazure_closed_form(
        &self,
        (x1, mu1, y1): (&WeylElement, &[i64], &WeylElement),
        (x2, mu2, y2): (&WeylElement, &[i64], &WeylElement),
    ) -> Result<AffineElement> {
        for mu in [mu1, mu2] {
            let depth = mu.iter().copied().min().unwrap_or(0);
            if depth < 2 {
                return Err(Error::DepthTooSmall {
                    depth: depth.to_string(),
                    required: 2,
                });
            }
        }
        let wt = Qbg::new(&self.weyl).weight(&y1.inverse(), x2);
        let wt = self.coroot_pairings(&wt);
        let exponent: Vec<i64> = (0..self.rank()).map(|i| mu1[i] + mu2[i] - wt[i]).collect();
        assert!(
            exponent.iter().all(|&p| p >= 0),
            "exponent {exponent:?} is not dominant"
        );
        Ok(self.from_parts(x1, &exponent, y2))
    }

    /// Dominant `W`-conjugate of a coweight given by pairings.
    pub fn dominant_pairings(&self, pairings: &[i64]) -> Vec<i64> {
        let a = self.root_system().cartan();
        let n = self.rank();
        let mut v = pairings.to_vec();
        while let Some(i) = (0..n).find(|&i| v[i] < 0) {
            let p = v[i];
            for j in 0..n {
                v[j] -= p * a[j][i];
            }
        }
        v
    }

    /// The dominant coweight `lambda` with `a in W t^lambda W`.
    pub fn dominant_translation(&self, a: &AffineElement) -> Vec<i64> {
        self.dominant_pairings(a.pairings())
    }

    pub fn to_json(&self, a: &AffineElement) -> AffineJson {
        let (word, omega) = self.left_decomposition(a);
        AffineJson {
            lambda: self.translation_coroots(a).to_pairs(),
            finite_word: self.weyl.reduced_word(&a.w),
            length: word.len(),
            word,
            omega: self.omega_index(&omega).expect("length-zero element lies in Omega"),
        }
    }

    /// `sigma_0(t^lambda w) = t^{sigma_0 lambda} sigma_0(w)`.
    pub fn apply_sigma0(&self, sigma0: &DiagramAutomorphism, a: &AffineElement) -> AffineElement {
        AffineElement::new(
            &sigma0.act_on_ints(a.pairings()),
            self.weyl.apply_automorphism(sigma0, &a.w),
        )
    }

    pub fn tau_element(&self, datum: &FrobeniusDatum) -> AffineElement {
        match datum.tau {
            Some(i) => self.tau(i).expect("validated datum"),
            None => self.identity(),
        }
    }

    /// Finite part `zeta` of `tau`.
    pub fn zeta(&self, datum: &FrobeniusDatum) -> WeylElement {
        *self.tau_element(datum).finite_part()
    }

    /// `sigma(a) = tau sigma_0(a) tau^{-1}`.
    pub fn sigma(&self, datum: &FrobeniusDatum, a: &AffineElement) -> AffineElement {
        let tau = self.tau_element(datum);
        let b = self.apply_sigma0(&datum.sigma0, a);
        self.mul(&self.mul(&tau, &b), &self.inverse(&tau))
    }

    /// The permutation of the affine nodes induced by `sigma`.
    pub fn affine_permutation(&self, datum: &FrobeniusDatum) -> Result<AffineDiagramAutomorphism> {
        let refl: Vec<AffineElement> = (0..=self.rank()).map(|k| self.simple_reflection(k)).collect();
        let images = refl
            .iter()
            .map(|s| {
                let img = self.sigma(datum, s);
                refl.iter()
                    .position(|t| *t == img)
                    .expect("sigma preserves the affine simple reflections")
            })
            .collect();
        AffineDiagramAutomorphism::from_images(self.root_system(), images)
    }

    /// `o(sigma)`: the order of `sigma` as an automorphism of the extended
    /// affine Weyl group, which equals the order of its node permutation.
    pub fn sigma_order(&self, datum: &FrobeniusDatum) -> usize {
        self.affine_permutation(datum)
            .expect("sigma is a diagram automorphism")
            .order()
    }

    /// `zeta^{sigma_0, j} = zeta sigma_0(zeta) ... sigma_0^{j-1}(zeta)`.
    pub fn twisted_zeta_power(&self, datum: &FrobeniusDatum, j: usize) -> WeylElement {
        let zeta = self.zeta(datum);
        let mut out = self.weyl.identity();
        let mut cur = zeta;
        for _ in 0..j {
            out = out.mul(&cur);
            cur = self.weyl.apply_automorphism(&datum.sigma0, &cur);
        }
        out
    }

    /// `o_tr(sigma)`: the order of `zeta sigma_0` acting on the coweight
    /// lattice, i.e. the least `j >= 1` with `zeta^{sigma_0, j} = 1` and
    /// `sigma_0^j = 1`.
    pub fn translation_order(&self, datum: &FrobeniusDatum) -> usize {
        let s = datum.sigma0.order();
        (1..)
            .map(|k| k * s)
            .find(|&j| self.twisted_zeta_power(datum, j).is_identity())
            .expect("finite order")
    }

    /// `w * sigma(w) * ... * sigma^{n-1}(w)`, folded from the left.
    pub fn twisted_demazure_power(
        &self,
        datum: &FrobeniusDatum,
        w: &AffineElement,
        n: usize,
    ) -> AffineElement {
        assert!(n >= 1, "Demazure powers start at n = 1");
        let mut acc = *w;
        let mut cur = *w;
        for _ in 1..n {
            cur = self.sigma(datum, &cur);
            acc = self.demazure(&acc, &cur);
        }
        acc
    }

    /// Newton point of the generic `sigma`-conjugacy class meeting
    /// `I w I`, from the linear growth of `w^{*sigma, n}` along
    /// `n = k o(sigma) + 1`. The iteration stops once both the length and the
    /// dominant translation part grow by the same amount over two consecutive
    /// periods.
    pub fn generic_newton_point(
        &self,
        datum: &FrobeniusDatum,
        w: &AffineElement,
    ) -> Result<GenericNewtonPoint> {
        let o = self.sigma_order(datum);
        let n = self.rank();
        let mut acc = *w;
        let mut cur = *w;
        let mut prev = (self.length(&acc) as i64, self.dominant_translation(&acc));
        let mut last_step: Option<(i64, Vec<i64>)> = None;
        for period in 1..=MAX_NEWTON_PERIODS {
            for _ in 0..o {
                cur = self.sigma(datum, &cur);
                acc = self.demazure(&acc, &cur);
            }
            let now = (self.length(&acc) as i64, self.dominant_translation(&acc));
            let step = (now.0 - prev.0, (0..n).map(|i| now.1[i] - prev.1[i]).collect::<Vec<_>>());
            if last_step.as_ref() == Some(&step) {
                let (dl, dpr) = step;
                let orbit_avg = sigma0_average(&datum.sigma0, &dpr);
                let scale = q(1, o as i64);
                let mut nu = CoweightVector::zero(n);
                for (i, c) in orbit_avg.iter().enumerate() {
                    nu = nu.add(&self.root_system().fundamental_coweights[i].scale(&(c * &scale)));
                }
                return Ok(GenericNewtonPoint {
                    nu,
                    two_rho_pairing: q(dl, o as i64),
                    periods: period,
                });
            }
            last_step = Some(step);
            prev = now;
        }
        Err(Error::NoStabilization(MAX_NEWTON_PERIODS))
    }

    /// Affine nodes fixed-point data used by the rank formula:
    /// `(|sigma_0 \ S~|, |sigma \ S~|)`.
    pub fn orbit_counts(&self, datum: &FrobeniusDatum) -> Result<(usize, usize)> {
        let rs = self.root_system();
        let quasi = rs.affine_orbit_count(&AffineDiagramAutomorphism::from_finite(&datum.sigma0))?;
        let full = rs.affine_orbit_count(&self.affine_permutation(datum)?)?;
        Ok((quasi, full))
    }
}

/// Average of an integer vector over the cyclic group generated by `sigma0`
/// acting on coordinates.
pub fn sigma0_average(sigma0: &DiagramAutomorphism, v: &[i64]) -> Vec<Q> {
    let m = sigma0.order();
    let mut sum = vec![Q::zero(); v.len()];
    let mut cur = v.to_vec();
    for _ in 0..m {
        for (s, c) in sum.iter_mut().zip(&cur) {
            *s += qi(*c);
        }
        cur = sigma0.act_on_ints(&cur);
    }
    sum.into_iter().map(|s| s / qi(m as i64)).collect()
}

/// Orbit average of a rational coweight (coroot coordinates).
pub fn sigma0_average_coweight(sigma0: &DiagramAutomorphism, v: &CoweightVector) -> CoweightVector {
    let m = sigma0.order();
    let mut sum = CoweightVector::zero(v.rank());
    let mut cur = v.clone();
    for _ in 0..m {
        sum = sum.add(&cur);
        cur = sigma0.act_on_coweight(&cur);
    }
    sum.scale(&q(1, m as i64))
}

/// Pretty form `t^(lambda) [word]` with `lambda` in coroot coordinates.
pub fn describe(aff: &AffineWeyl, a: &AffineElement) -> String {
    let lambda = aff.translation_coroots(a);
    let word = aff.weyl().reduced_word(a.finite_part());
    let word: String = if word.is_empty() {
        "1".into()
    } else {
        let w: Vec<String> = word.iter().map(|k| k.to_string()).collect();
        format!("s_{}", w.join(""))
    };
    format!("t^{lambda} {word}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{all_types, CartanDatum};

    fn aff(l: TypeLetter, n: usize) -> AffineWeyl {
        AffineWeyl::of_type(l, n).unwrap()
    }

    #[test]
    fn tau_has_length_zero() {
        for (l, n) in all_types(7) {
            let a = aff(l, n);
            for i in a.root_system().minuscule_coweight_indices() {
                let t = a.tau(i).unwrap();
                assert_eq!(a.length(&t), 0, "{l}{n} tau{i}");
            }
        }
        let a1 = aff(TypeLetter::A, 1);
        let t = a1.tau(1).unwrap();
        assert_eq!(t.pairings(), &[1]);
        assert_eq!(*t.finite_part(), a1.weyl().generator(1));
    }

    #[test]
    fn tau_power_is_translation() {
        let a3 = aff(TypeLetter::A, 3);
        let t = a3.tau(1).unwrap();
        let mut p = t;
        for _ in 1..4 {
            p = a3.mul(&p, &t);
        }
        assert!(p.is_translation());
        let d5 = aff(TypeLetter::D, 5);
        let t = d5.tau(5).unwrap();
        let p = (1..4).fold(t, |acc, _| d5.mul(&acc, &t));
        assert!(p.is_translation());
    }

    #[test]
    fn simple_reflections_have_length_one() {
        for (l, n) in all_types(6) {
            let a = aff(l, n);
            for k in 0..=n {
                let s = a.simple_reflection(k);
                assert_eq!(a.length(&s), 1);
                assert_eq!(a.mul(&s, &s), a.identity());
            }
        }
    }

    #[test]
    fn translation_length_is_two_rho_pairing() {
        let b3 = aff(TypeLetter::B, 3);
        let rs = b3.root_system().clone();
        let mu = [2, 1, 3];
        let pair: i64 = rs.two_rho.iter().zip(&mu).map(|(a, b)| a * b).sum();
        let g = b3.weyl().enumerate(100).unwrap();
        for x in g.elements() {
            let t = b3.translation(&b3.weyl().act_on_pairings(x, &mu));
            assert_eq!(b3.length(&t) as i64, pair);
        }
    }

    #[test]
    fn multiplication_and_inverse() {
        let c3 = aff(TypeLetter::C, 3);
        let a = c3.from_affine_word(&[0, 1, 2, 3, 0]).unwrap();
        let b = c3.from_affine_word(&[3, 2, 0, 1]).unwrap();
        let c = c3.tau(3).unwrap();
        assert_eq!(c3.mul(&c3.mul(&a, &b), &c), c3.mul(&a, &c3.mul(&b, &c)));
        assert_eq!(c3.mul(&a, &c3.inverse(&a)), c3.identity());
    }

    #[test]
    fn decompositions_reassemble() {
        let a2 = aff(TypeLetter::A, 2);
        let t = a2.tau(1).unwrap();
        let x = a2.mul(&a2.from_affine_word(&[0, 1, 2, 1, 0]).unwrap(), &t);
        let (word, omega) = a2.left_decomposition(&x);
        assert_eq!(word.len(), a2.length(&x));
        let rebuilt = a2.mul(&a2.from_affine_word(&word).unwrap(), &omega);
        assert_eq!(rebuilt, x);
        let (omega, word) = a2.right_decomposition(&x);
        assert_eq!(a2.mul(&omega, &a2.from_affine_word(&word).unwrap()), x);
        assert_eq!(a2.omega_index(&omega), Some(1));
    }

    #[test]
    fn demazure_basic_rules() {
        let b2 = aff(TypeLetter::B, 2);
        for k in 0..=2 {
            let s = b2.simple_reflection(k);
            assert_eq!(b2.demazure(&s, &s), s);
        }
        let a = b2.from_affine_word(&[0, 1]).unwrap();
        let b = b2.from_affine_word(&[2, 1]).unwrap();
        let ab = b2.mul(&a, &b);
        assert_eq!(b2.length(&ab), 4);
        assert_eq!(b2.demazure(&a, &b), ab);
    }

    #[test]
    fn closed_form_a2_example() {
        let a2 = aff(TypeLetter::A, 2);
        let w = a2.weyl();
        let w0 = w.longest_element();
        let one = w.identity();
        let two_rho = [2, 2];
        let closed = a2
            .demazure_closed_form((&one, &two_rho, &w0), (&one, &two_rho, &one))
            .unwrap();
        // 4 rho^vee - theta^vee has pairings (3, 3)
        assert_eq!(closed, a2.translation(&[3, 3]));
        let a = a2.from_parts(&one, &two_rho, &w0);
        let b = a2.translation(&two_rho);
        assert_eq!(a2.demazure_left_fold(&a, &b), closed);
        assert_eq!(a2.demazure_right_fold(&a, &b), closed);
    }

    #[test]
    fn closed_form_rejects_shallow() {
        let a2 = aff(TypeLetter::A, 2);
        let one = a2.weyl().identity();
        let err = a2
            .demazure_closed_form((&one, &[1, 2], &one), (&one, &[2, 2], &one))
            .unwrap_err();
        assert!(matches!(err, Error::DepthTooSmall { .. }));
    }

    #[test]
    fn sigma_preserves_length_and_permutes_nodes() {
        let rs = RootSystem::new(TypeLetter::A, 3).unwrap();
        let a3 = AffineWeyl::new(Weyl::new(rs.clone()));
        let datum = FrobeniusDatum::split(&rs, Some(1)).unwrap();
        let perm = a3.affine_permutation(&datum).unwrap();
        // tau_1 rotates the affine A_3 diagram
        assert_eq!(perm.images(), &[1, 2, 3, 0]);
        assert_eq!(a3.sigma_order(&datum), 4);
        assert_eq!(a3.translation_order(&datum), 4);
        let x = a3.from_affine_word(&[0, 2, 1, 3]).unwrap();
        assert_eq!(a3.length(&a3.sigma(&datum, &x)), a3.length(&x));
    }

    #[test]
    fn orbit_counts_e6() {
        let rs = RootSystem::new(TypeLetter::E, 6).unwrap();
        let e6 = AffineWeyl::new(Weyl::new(rs.clone()));
        let datum = FrobeniusDatum::split(&rs, Some(1)).unwrap();
        let perm = e6.affine_permutation(&datum).unwrap();
        let orbits = perm.orbits();
        assert_eq!(orbits, vec![vec![0, 1, 6], vec![2, 3, 5], vec![4]]);
        assert_eq!(e6.orbit_counts(&datum).unwrap(), (7, 3));
        let flip = DiagramAutomorphism::flip(&CartanDatum::new(TypeLetter::E, 6).unwrap()).unwrap();
        let twisted = FrobeniusDatum::new(&rs, Some(1), flip).unwrap();
        let orbits = e6.affine_permutation(&twisted).unwrap().orbits();
        assert_eq!(
            orbits,
            vec![vec![0, 1], vec![2, 3], vec![4], vec![5], vec![6]]
        );
    }

    #[test]
    fn translation_order_divides_order() {
        for (l, n) in all_types(7) {
            let rs = RootSystem::new(l, n).unwrap();
            let a = AffineWeyl::new(Weyl::new(rs.clone()));
            for i in rs.minuscule_coweight_indices() {
                let d = FrobeniusDatum::split(&rs, Some(i)).unwrap();
                let (o, otr) = (a.sigma_order(&d), a.translation_order(&d));
                assert_eq!(o % otr, 0, "{}", d.name());
            }
        }
    }

    #[test]
    fn twisted_power_of_dominant_translation() {
        let rs = RootSystem::new(TypeLetter::B, 2).unwrap();
        let b2 = AffineWeyl::new(Weyl::new(rs.clone()));
        let d = FrobeniusDatum::split(&rs, None).unwrap();
        let t = b2.translation(&[2, 3]);
        assert_eq!(b2.twisted_demazure_power(&d, &t, 1), t);
        assert_eq!(b2.twisted_demazure_power(&d, &t, 4), b2.translation(&[8, 12]));
        let nu = b2.generic_newton_point(&d, &t).unwrap();
        assert_eq!(nu.nu, rs.coweight_from_pairings(&[2, 3]));
    }

    #[test]
    fn json_round_trip_fields() {
        let a2 = aff(TypeLetter::A, 2);
        let x = a2.mul(&a2.from_affine_word(&[0, 1]).unwrap(), &a2.tau(2).unwrap());
        let j = a2.to_json(&x);
        assert_eq!(j.omega, 2);
        assert_eq!(j.length, 2);
        let rebuilt = a2.mul(&a2.from_affine_word(&j.word).unwrap(), &a2.tau(j.omega).unwrap());
        assert_eq!(rebuilt, x);
    }
}
