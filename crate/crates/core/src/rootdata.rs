//! Root data for the irreducible reduced crystallographic root systems.
//!
//! Everything is stored in Bourbaki labelling. Nodes of the finite Dynkin
//! diagram carry the labels `1..=n`; the extra node of the affine diagram is
//! `0`. Roots are integer vectors in the basis of simple roots, coroots are
//! integer vectors in the basis of simple coroots, and rational coweights are
//! vectors of exact rationals in the simple-coroot basis.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{invert, q_parts, qi, Q};

/// Largest rank handled (E8).
pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "E" => Ok(TypeLetter::E),
            "F" => Ok(TypeLetter::F),
            "G" => Ok(TypeLetter::G),
            other => Err(Error::Parse(format!("unknown type letter {other:?}"))),
        }
    }
}

/// A Cartan type together with its Cartan matrix.
///
/// `cartan[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>`, so row `i` lists the
/// pairings of the simple root `i+1` with all simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub letter: TypeLetter,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidType {
            letter: letter.to_string(),
            rank,
            reason,
        };
        let n = rank;
        if n > MAX_RANK {
            return Err(invalid("rank is limited to 8"));
        }
        // (i, j, a_ij, a_ji) for every edge, 1-based.
        let mut edges: Vec<(usize, usize, i64, i64)> = Vec::new();
        match letter {
            TypeLetter::A => {
                if n < 1 {
                    return Err(invalid("A_n needs n >= 1"));
                }
                edges.extend((1..n).map(|i| (i, i + 1, -1, -1)));
            }
            TypeLetter::B | TypeLetter::C => {
                if n < 2 {
                    return Err(invalid("B_n and C_n need n >= 2"));
                }
                edges.extend((1..n - 1).map(|i| (i, i + 1, -1, -1)));
                // B_n: alpha_n short, so <alpha_{n-1}, alpha_n^vee> = -2.
                if letter == TypeLetter::B {
                    edges.push((n - 1, n, -2, -1));
                } else {
                    edges.push((n - 1, n, -1, -2));
                }
            }
            TypeLetter::D => {
                if n < 4 {
                    return Err(invalid("D_n needs n >= 4"));
                }
                edges.extend((1..n - 1).map(|i| (i, i + 1, -1, -1)));
                edges.push((n - 2, n, -1, -1));
            }
            TypeLetter::E => {
                if !(6..=8).contains(&n) {
                    return Err(invalid("E_n needs n in 6..=8"));
                }
                edges.push((1, 3, -1, -1));
                edges.push((2, 4, -1, -1));
                edges.extend((3..n).map(|i| (i, i + 1, -1, -1)));
            }
            TypeLetter::F => {
                if n != 4 {
                    return Err(invalid("F only exists in rank 4"));
                }
                edges.push((1, 2, -1, -1));
                edges.push((2, 3, -2, -1));
                edges.push((3, 4, -1, -1));
            }
            TypeLetter::G => {
                if n != 2 {
                    return Err(invalid("G only exists in rank 2"));
                }
                // alpha_1 short, alpha_2 long
                edges.push((1, 2, -1, -3));
            }
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j, aij, aji) in edges {
            cartan[i - 1][j - 1] = aij;
            cartan[j - 1][i - 1] = aji;
        }
        Ok(CartanDatum {
            letter,
            rank,
            cartan,
        })
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }
}

/// A rational coweight in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoweightVector(pub Vec<Q>);

impl CoweightVector {
    pub fn zero(rank: usize) -> Self {
        CoweightVector(vec![Q::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        CoweightVector(coords.iter().map(|&x| qi(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        CoweightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        CoweightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Q) -> Self {
        CoweightVector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinates as `[num, den]` pairs.
    pub fn to_pairs(&self) -> Vec<[i64; 2]> {
        self.0
            .iter()
            .map(|x| {
                let (n, d) = q_parts(x);
                [n, d]
            })
            .collect()
    }

    /// Renders as e.g. `1/2 a3v + a4v`; the zero vector renders as `0`.
    pub fn display_coroots(&self) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                if *c == qi(1) {
                    format!("a{}v", j + 1)
                } else {
                    format!("{} a{}v", c, j + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for CoweightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A permutation of the finite Dynkin diagram nodes `1..=n` preserving the
/// Cartan matrix. `images[k - 1]` is the image of node `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    images: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism {
            images: (1..=rank).collect(),
        }
    }

    pub fn from_images(datum: &CartanDatum, images: Vec<usize>) -> Result<Self> {
        let n = datum.rank;
        let valid_perm = images.len() == n
            && images.iter().all(|&k| (1..=n).contains(&k))
            && images.iter().collect::<HashSet<_>>().len() == n;
        if !valid_perm {
            return Err(Error::NotAnAutomorphism(images));
        }
        for i in 0..n {
            for j in 0..n {
                if datum.cartan[images[i] - 1][images[j] - 1] != datum.cartan[i][j] {
                    return Err(Error::NotAnAutomorphism(images));
                }
            }
        }
        Ok(DiagramAutomorphism { images })
    }

    /// The non-trivial involution of the diagram: reversal for A_n, the swap
    /// of the two short legs for D_n, and `1<->6, 3<->5` for E_6.
    pub fn flip(datum: &CartanDatum) -> Result<Self> {
        let n = datum.rank;
        let images = match datum.letter {
            TypeLetter::A if n >= 2 => (1..=n).rev().collect(),
            TypeLetter::D => {
                let mut v: Vec<usize> = (1..=n).collect();
                v.swap(n - 2, n - 1);
                v
            }
            TypeLetter::E if n == 6 => vec![6, 2, 5, 4, 3, 1],
            _ => {
                return Err(Error::InvalidType {
                    letter: datum.letter.to_string(),
                    rank: n,
                    reason: "no non-trivial diagram involution",
                })
            }
        };
        Self::from_images(datum, images)
    }

    /// Triality of D_4 sending `1 -> 3 -> 4 -> 1`.
    pub fn triality(datum: &CartanDatum) -> Result<Self> {
        if datum.letter != TypeLetter::D || datum.rank != 4 {
            return Err(Error::InvalidType {
                letter: datum.letter.to_string(),
                rank: datum.rank,
                reason: "triality only exists for D_4",
            });
        }
        Self::from_images(datum, vec![3, 2, 4, 1])
    }

    /// Parses `id`, `flip` or `triality`.
    pub fn by_name(datum: &CartanDatum, name: &str) -> Result<Self> {
        match name {
            "id" | "identity" => Ok(Self::identity(datum.rank)),
            "flip" => Self::flip(datum),
            "triality" => Self::triality(datum),
            other => Err(Error::Parse(format!(
                "unknown diagram automorphism {other:?} (expected id, flip or triality)"
            ))),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of the node `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &k)| k == i + 1)
    }

    pub fn order(&self) -> usize {
        self.orbits().iter().map(Vec::len).fold(1, |a, b| a.lcm(&b))
    }

    pub fn compose(&self, other: &Self) -> Self {
        DiagramAutomorphism {
            images: (1..=self.rank()).map(|k| self.apply(other.apply(k))).collect(),
        }
    }

    /// Orbits on `1..=n`, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.images, 1)
    }

    /// Permutes coordinates: the vector sum `c_k alpha_k^vee` goes to
    /// `c_k alpha_{sigma(k)}^vee`.
    pub fn act_on_coweight(&self, v: &CoweightVector) -> CoweightVector {
        let mut out = vec![Q::zero(); v.rank()];
        for (k, c) in v.0.iter().enumerate() {
            out[self.images[k] - 1] = c.clone();
        }
        CoweightVector(out)
    }

    /// Same permutation on integer coordinate vectors (in any basis indexed by
    /// nodes, e.g. pairings with simple roots).
    pub fn act_on_ints(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (k, c) in v.iter().enumerate() {
            out[self.images[k] - 1] = *c;
        }
        out
    }

    /// Short human name: `id`, `flip` or `triality`.
    pub fn describe(&self) -> String {
        if self.is_identity() {
            "id".into()
        } else if self.order() == 3 {
            "triality".into()
        } else {
            "flip".into()
        }
    }
}

/// A permutation of the affine Dynkin diagram nodes `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineDiagramAutomorphism {
    images: Vec<usize>,
}

impl AffineDiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        AffineDiagramAutomorphism {
            images: (0..=rank).collect(),
        }
    }

    /// `images[k]` is the image of node `k`; validated against the affine
    /// Cartan matrix of `rs`.
    pub fn from_images(rs: &RootSystem, images: Vec<usize>) -> Result<Self> {
        let n = rs.rank();
        let valid_perm = images.len() == n + 1
            && images.iter().all(|&k| k <= n)
            && images.iter().collect::<HashSet<_>>().len() == n + 1;
        if !valid_perm {
            return Err(Error::NotAnAutomorphism(images));
        }
        let a = rs.affine_cartan();
        for i in 0..=n {
            for j in 0..=n {
                if a[images[i]][images[j]] != a[i][j] {
                    return Err(Error::NotAnAutomorphism(images));
                }
            }
        }
        Ok(AffineDiagramAutomorphism { images })
    }

    /// Extends a finite diagram automorphism by fixing the node 0.
    pub fn from_finite(sigma0: &DiagramAutomorphism) -> Self {
        let mut images = vec![0];
        images.extend_from_slice(sigma0.images());
        AffineDiagramAutomorphism { images }
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.images, 0)
    }

    pub fn order(&self) -> usize {
        self.orbits().iter().map(Vec::len).fold(1, |a, b| a.lcm(&b))
    }
}

fn orbits_of(images: &[usize], offset: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            orbit.insert(k + offset);
            k = images[k] - offset;
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Root system data derived from a [`CartanDatum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub datum: CartanDatum,
    /// `d_k = (alpha_k, alpha_k) / 2`, normalised so the short roots have 1.
    pub symmetrizer: Vec<i64>,
    /// Positive roots in simple-root coordinates, ordered by height.
    pub positive_roots: Vec<Vec<i64>>,
    /// The coroot of `positive_roots[k]`, in simple-coroot coordinates.
    pub positive_coroots: Vec<Vec<i64>>,
    /// Sum of the positive roots, simple-root coordinates.
    pub two_rho: Vec<i64>,
    /// Sum of the positive coroots, simple-coroot coordinates.
    pub two_rho_check: Vec<i64>,
    pub fundamental_coweights: Vec<CoweightVector>,
    /// Index of the highest root in `positive_roots`.
    pub highest_root: usize,
}

impl RootSystem {
    /// Builds the root system of the given type by closing the simple roots
    /// under simple reflections.
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        Ok(Self::from_datum(CartanDatum::new(letter, rank)?))
    }

    pub fn from_datum(datum: CartanDatum) -> Self {
        let n = datum.rank;
        let a = &datum.cartan;
        let symmetrizer = symmetrizer(a);

        let mut positive_roots: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            positive_roots.push(e);
        }
        let mut head = 0;
        while head < positive_roots.len() {
            let beta = positive_roots[head].clone();
            head += 1;
            for i in 0..n {
                let c: i64 = (0..n).map(|k| beta[k] * a[k][i]).sum();
                if c == 0 {
                    continue;
                }
                let mut gamma = beta.clone();
                gamma[i] -= c;
                if gamma.iter().all(|&x| x >= 0) && seen.insert(gamma.clone()) {
                    positive_roots.push(gamma);
                }
            }
        }
        positive_roots.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });

        let positive_coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|r| coroot_of(r, a, &symmetrizer))
            .collect();
        let mut two_rho = vec![0; n];
        let mut two_rho_check = vec![0; n];
        for (r, c) in positive_roots.iter().zip(&positive_coroots) {
            for k in 0..n {
                two_rho[k] += r[k];
                two_rho_check[k] += c[k];
            }
        }

        let p: Vec<Vec<Q>> = a
            .iter()
            .map(|row| row.iter().map(|&x| qi(x)).collect())
            .collect();
        let inv = invert(&p).expect("Cartan matrices are invertible");
        let fundamental_coweights = (0..n)
            .map(|i| CoweightVector((0..n).map(|j| inv[j][i].clone()).collect()))
            .collect();

        let highest_root = positive_roots.len() - 1;
        RootSystem {
            datum,
            symmetrizer,
            positive_roots,
            positive_coroots,
            two_rho,
            two_rho_check,
            fundamental_coweights,
            highest_root,
        }
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn letter(&self) -> TypeLetter {
        self.datum.letter
    }

    pub fn name(&self) -> String {
        self.datum.name()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.datum.cartan
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn check_label(&self, label: usize) -> Result<()> {
        if (1..=self.rank()).contains(&label) {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange {
                label,
                lo: 1,
                hi: self.rank(),
            })
        }
    }

    /// The fundamental coweight `varpi_i^vee` in simple-coroot coordinates.
    pub fn fundamental_coweight(&self, i: usize) -> Result<CoweightVector> {
        self.check_label(i)?;
        Ok(self.fundamental_coweights[i - 1].clone())
    }

    /// Pairings `<alpha_i, lambda>` with all simple roots.
    pub fn simple_pairings(&self, lambda: &CoweightVector) -> Vec<Q> {
        let a = self.cartan();
        (0..self.rank())
            .map(|i| {
                lambda
                    .0
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * qi(a[i][j]))
                    .sum()
            })
            .collect()
    }

    /// Pairing of a root (simple-root coordinates) with a coweight.
    pub fn pair_root(&self, root: &[i64], lambda: &CoweightVector) -> Q {
        self.simple_pairings(lambda)
            .iter()
            .zip(root)
            .map(|(p, &r)| p * qi(r))
            .sum()
    }

    /// `<2 rho, lambda>`.
    pub fn pair_two_rho(&self, lambda: &CoweightVector) -> Q {
        self.pair_root(&self.two_rho, lambda)
    }

    /// Inverse of [`Self::simple_pairings`]: the coweight with the given
    /// pairings against the simple roots.
    pub fn coweight_from_pairings(&self, pairings: &[i64]) -> CoweightVector {
        let n = self.rank();
        let mut out = CoweightVector::zero(n);
        for (i, &p) in pairings.iter().enumerate() {
            if p != 0 {
                out = out.add(&self.fundamental_coweights[i].scale(&qi(p)));
            }
        }
        out
    }

    /// Integer pairings with the simple roots, or an error when `lambda` is
    /// not in the coweight lattice.
    pub fn integral_pairings(&self, lambda: &CoweightVector) -> Result<Vec<i64>> {
        let p = self.simple_pairings(lambda);
        if p.iter().all(|x| x.is_integer()) {
            Ok(p.iter().map(|x| q_parts(x).0).collect())
        } else {
            Err(Error::NotInCoweightLattice(
                p.iter().map(|x| x.to_string()).collect(),
            ))
        }
    }

    /// `min <alpha_i, lambda>` over the simple roots.
    pub fn depth(&self, lambda: &CoweightVector) -> Q {
        self.simple_pairings(lambda)
            .into_iter()
            .min()
            .unwrap_or_else(Q::zero)
    }

    pub fn is_dominant(&self, lambda: &CoweightVector) -> bool {
        self.simple_pairings(lambda).iter().all(|x| !x.is_negative())
    }

    pub fn is_regular_dominant(&self, lambda: &CoweightVector) -> bool {
        self.simple_pairings(lambda).iter().all(|x| x.is_positive())
    }

    /// Labels `i` with `varpi_i^vee` minuscule, i.e. `<theta, varpi_i^vee> = 1`.
    pub fn minuscule_coweight_indices(&self) -> Vec<usize> {
        let theta = &self.positive_roots[self.highest_root];
        (1..=self.rank()).filter(|&i| theta[i - 1] == 1).collect()
    }

    pub fn is_minuscule(&self, i: usize) -> bool {
        (1..=self.rank()).contains(&i) && self.positive_roots[self.highest_root][i - 1] == 1
    }

    /// `nu <= nu'` in dominance order: `nu' - nu` is a non-negative rational
    /// combination of simple coroots.
    pub fn dominance_leq(&self, nu: &CoweightVector, nu_prime: &CoweightVector) -> bool {
        nu_prime.sub(nu).0.iter().all(|x| !x.is_negative())
    }

    pub fn rho_check(&self) -> CoweightVector {
        CoweightVector(self.two_rho_check.iter().map(|&x| crate::linalg::q(x, 2)).collect())
    }

    /// The highest root in simple-root coordinates.
    pub fn theta(&self) -> &[i64] {
        &self.positive_roots[self.highest_root]
    }

    /// The coroot of the highest root.
    pub fn theta_check(&self) -> &[i64] {
        &self.positive_coroots[self.highest_root]
    }

    /// The affine Cartan matrix on nodes `0..=n`, with `alpha_0 = -theta`
    /// and `alpha_0^vee = -theta^vee`.
    pub fn affine_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let a = self.cartan();
        let theta = self.theta();
        let theta_c = self.theta_check();
        let mut out = vec![vec![0i64; n + 1]; n + 1];
        out[0][0] = 2;
        for j in 0..n {
            // <alpha_j, -theta^vee> and <-theta, alpha_j^vee>
            out[j + 1][0] = -(0..n).map(|k| a[j][k] * theta_c[k]).sum::<i64>();
            out[0][j + 1] = -(0..n).map(|k| theta[k] * a[k][j]).sum::<i64>();
            for k in 0..n {
                out[j + 1][k + 1] = a[j][k];
            }
        }
        out
    }

    /// Number of orbits of the cyclic group generated by `perm` on the
    /// affine nodes.
    pub fn affine_orbit_count(&self, perm: &AffineDiagramAutomorphism) -> Result<usize> {
        // re-validate: the caller may have built it for another system
        let checked = AffineDiagramAutomorphism::from_images(self, perm.images().to_vec())?;
        Ok(checked.orbits().len())
    }

    /// Serializable summary of the root data.
    pub fn export(&self) -> RootSystemExport {
        RootSystemExport {
            r#type: self.letter().to_string(),
            rank: self.rank(),
            cartan: self.cartan().to_vec(),
            positive_roots: self.positive_roots.clone(),
            two_rho: self.two_rho.clone(),
            fundamental_coweights: self.fundamental_coweights.iter().map(|v| v.to_pairs()).collect(),
        }
    }
}

/// JSON form of a root system; rationals are `[num, den]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemExport {
    pub r#type: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub two_rho: Vec<i64>,
    pub fundamental_coweights: Vec<Vec<[i64; 2]>>,
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    // a_ij d_j = a_ji d_i; propagate along the (connected) diagram.
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(qi(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * qi(a[j][i]) / qi(a[i][j]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = d.iter().min().unwrap().clone();
    d.iter().map(|x| q_parts(&(x / &min)).0).collect()
}

fn coroot_of(root: &[i64], a: &[Vec<i64>], d: &[i64]) -> Vec<i64> {
    let n = root.len();
    // (alpha, alpha) = sum r_i r_j a_ij d_j
    let mut norm2 = 0;
    for i in 0..n {
        for j in 0..n {
            norm2 += root[i] * root[j] * a[i][j] * d[j];
        }
    }
    let d_alpha = norm2 / 2;
    root.iter()
        .zip(d)
        .map(|(&r, &dk)| {
            debug_assert_eq!((r * dk) % d_alpha, 0);
            r * dk / d_alpha
        })
        .collect()
}

/// All supported irreducible types of rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<(TypeLetter, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push((TypeLetter::A, n));
    }
    for n in 2..=max_rank {
        out.push((TypeLetter::B, n));
    }
    for n in 2..=max_rank {
        out.push((TypeLetter::C, n));
    }
    for n in 4..=max_rank {
        out.push((TypeLetter::D, n));
    }
    for n in 6..=max_rank.min(8) {
        out.push((TypeLetter::E, n));
    }
    if max_rank >= 4 {
        out.push((TypeLetter::F, 4));
    }
    if max_rank >= 2 {
        out.push((TypeLetter::G, 2));
    }
    out
}
