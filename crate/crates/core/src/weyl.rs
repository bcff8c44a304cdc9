//! Finite Weyl groups.
//!
//! An element is stored as its integer action matrix on the coroot lattice
//! (column `j` is the image of `alpha_j^vee`) together with the matrix of its
//! inverse. Identity of elements is decided by [`Weyl::key`], the image of the
//! regular coweight `2 rho^vee`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{integer_rank, Q};
use crate::rootdata::{CoweightVector, DiagramAutomorphism, RootSystem, TypeLetter, MAX_RANK};

type Mat = [[i16; MAX_RANK]; MAX_RANK];

/// Largest group enumerated unless the caller raises the cap (E6).
pub const DEFAULT_GROUP_CAP: usize = 51_840;
/// Largest twisted class closed unless the caller raises the cap.
pub const DEFAULT_CLASS_CAP: usize = 4_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: u8,
    mat: Mat,
    inv: Mat,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylElement")
            .field("matrix", &self.matrix())
            .finish()
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        let mut mat = [[0; MAX_RANK]; MAX_RANK];
        for (i, row) in mat.iter_mut().enumerate().take(rank) {
            row[i] = 1;
        }
        WeylElement {
            rank: rank as u8,
            mat,
            inv: mat,
        }
    }

    fn from_involution(rank: usize, mat: Mat) -> Self {
        WeylElement {
            rank: rank as u8,
            mat,
            inv: mat,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn mul(&self, other: &Self) -> Self {
        WeylElement {
            rank: self.rank,
            mat: matmul(&self.mat, &other.mat, self.rank()),
            inv: matmul(&other.inv, &self.inv, self.rank()),
        }
    }

    pub fn inverse(&self) -> Self {
        WeylElement {
            rank: self.rank,
            mat: self.inv,
            inv: self.mat,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank())
    }

    /// Action matrix on simple-coroot coordinates.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.mat[i][j] as i64).collect())
            .collect()
    }

    /// Image of an integer vector in simple-coroot coordinates.
    pub fn act_coroot(&self, c: &[i64]) -> Vec<i64> {
        apply(&self.mat, c, self.rank())
    }

    pub fn act_coroot_inverse(&self, c: &[i64]) -> Vec<i64> {
        apply(&self.inv, c, self.rank())
    }

    pub fn act_coweight(&self, v: &CoweightVector) -> CoweightVector {
        let n = self.rank();
        CoweightVector(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| &v.0[j] * Q::from_integer((self.mat[i][j] as i64).into()))
                        .sum()
                })
                .collect(),
        )
    }

    /// Whether `w` maps the coroot `c` (simple-coroot coordinates) to a
    /// negative one. Only meaningful for roots.
    #[inline]
    pub fn sends_negative(&self, c: &[i64]) -> bool {
        signed_height(&self.mat, c, self.rank()) < 0
    }

    #[inline]
    pub fn inverse_sends_negative(&self, c: &[i64]) -> bool {
        signed_height(&self.inv, c, self.rank()) < 0
    }

    /// `w(alpha_i^vee)` is a negative coroot, i.e. `l(w s_i) < l(w)`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        column_sum(&self.mat, i - 1, self.rank()) < 0
    }

    /// `w^{-1}(alpha_i^vee)` is negative, i.e. `l(s_i w) < l(w)`.
    #[inline]
    pub fn has_left_descent(&self, i: usize) -> bool {
        column_sum(&self.inv, i - 1, self.rank()) < 0
    }
}

#[inline]
fn matmul(a: &Mat, b: &Mat, n: usize) -> Mat {
    let mut out = [[0i16; MAX_RANK]; MAX_RANK];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

#[inline]
fn apply(m: &Mat, c: &[i64], n: usize) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| m[i][j] as i64 * c[j]).sum())
        .collect()
}

#[inline]
fn signed_height(m: &Mat, c: &[i64], n: usize) -> i64 {
    let mut h = 0;
    for (j, &cj) in c.iter().enumerate().take(n) {
        if cj != 0 {
            h += cj * column_sum(m, j, n) as i64;
        }
    }
    h
}

#[inline]
fn column_sum(m: &Mat, j: usize, n: usize) -> i32 {
    (0..n).map(|i| m[i][j] as i32).sum()
}

/// Canonical element key: image of `2 rho^vee` in coroot coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementKey([i32; MAX_RANK]);

/// A finite Weyl group attached to a root system.
#[derive(Debug, Clone)]
pub struct Weyl {
    rs: RootSystem,
    gens: Vec<WeylElement>,
}

impl Weyl {
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.rank();
        let gens = (0..n)
            .map(|i| {
                let mut m = WeylElement::identity(n).mat;
                // s_i(c) = c - <alpha_i, c> alpha_i^vee
                for j in 0..n {
                    m[i][j] -= rs.cartan()[i][j] as i16;
                }
                WeylElement::from_involution(n, m)
            })
            .collect();
        Weyl { rs, gens }
    }

    pub fn of_type(letter: TypeLetter, rank: usize) -> Result<Self> {
        Ok(Self::new(RootSystem::new(letter, rank)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    /// The simple reflection `s_i`, `1 <= i <= n`.
    pub fn generator(&self, i: usize) -> WeylElement {
        self.gens[i - 1]
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of simple reflections; the word need
    /// not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            self.rs.check_label(i)?;
            w = w.mul(&self.gens[i - 1]);
        }
        Ok(w)
    }

    /// The reflection `s_alpha` for `alpha = positive_roots[a]`.
    pub fn reflection(&self, a: usize) -> WeylElement {
        let n = self.rank();
        let root = &self.rs.positive_roots[a];
        let coroot = &self.rs.positive_coroots[a];
        let cartan = self.rs.cartan();
        let mut m = WeylElement::identity(n).mat;
        for j in 0..n {
            let pairing: i64 = (0..n).map(|k| root[k] * cartan[k][j]).sum();
            for i in 0..n {
                m[i][j] -= (coroot[i] * pairing) as i16;
            }
        }
        WeylElement::from_involution(n, m)
    }

    pub fn key(&self, w: &WeylElement) -> ElementKey {
        let n = self.rank();
        let mut k = [0i32; MAX_RANK];
        for (i, slot) in k.iter_mut().enumerate().take(n) {
            *slot = (0..n)
                .map(|j| w.mat[i][j] as i32 * self.rs.two_rho_check[j] as i32)
                .sum();
        }
        ElementKey(k)
    }

    /// Number of positive roots sent to negative roots by `w^{-1}`.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.rs
            .positive_coroots
            .iter()
            .filter(|c| w.inverse_sends_negative(c))
            .count()
    }

    /// Reduced word, built by repeatedly stripping the smallest right
    /// descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = *w;
        while let Some(i) = (1..=self.rank()).find(|&i| cur.has_right_descent(i)) {
            word.push(i);
            cur = cur.mul(&self.gens[i - 1]);
        }
        word.reverse();
        word
    }

    /// Set of labels occurring in any (equivalently every) reduced word.
    pub fn support(&self, w: &WeylElement) -> BTreeSet<usize> {
        self.reduced_word(w).into_iter().collect()
    }

    pub fn longest_element(&self) -> WeylElement {
        let all: Vec<usize> = (1..=self.rank()).collect();
        self.longest_parabolic(&all)
    }

    /// Longest element of the parabolic subgroup generated by `{s_j : j in J}`.
    pub fn longest_parabolic(&self, subset: &[usize]) -> WeylElement {
        let mut w = self.identity();
        while let Some(&j) = subset.iter().find(|&&j| !w.has_right_descent(j)) {
            w = w.mul(&self.gens[j - 1]);
        }
        w
    }

    /// `zeta_i = w_{i,0} w_0` for a minuscule fundamental coweight.
    pub fn zeta(&self, i: usize) -> Result<WeylElement> {
        self.rs.check_label(i)?;
        if !self.rs.is_minuscule(i) {
            return Err(Error::NotMinuscule(i));
        }
        let rest: Vec<usize> = (1..=self.rank()).filter(|&j| j != i).collect();
        Ok(self.longest_parabolic(&rest).mul(&self.longest_element()))
    }

    /// `n - dim ker(M_w - 1)`.
    pub fn reflection_length(&self, w: &WeylElement) -> usize {
        let n = self.rank();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| w.mat[i][j] as i64 - (i == j) as i64)
                    .collect()
            })
            .collect();
        integer_rank(&rows)
    }

    /// `sigma_0(w)`: the word image under the node permutation.
    pub fn apply_automorphism(&self, sigma0: &DiagramAutomorphism, w: &WeylElement) -> WeylElement {
        if sigma0.is_identity() {
            return *w;
        }
        let n = self.rank();
        let mut out = *w;
        for i in 0..n {
            for j in 0..n {
                let (pi, pj) = (sigma0.apply(i + 1) - 1, sigma0.apply(j + 1) - 1);
                out.mat[pi][pj] = w.mat[i][j];
                out.inv[pi][pj] = w.inv[i][j];
            }
        }
        out
    }

    /// `w` is a Coxeter element of `W_J`: it has a reduced word using each
    /// label of `J` exactly once.
    pub fn is_coxeter_of(&self, w: &WeylElement, subset: &BTreeSet<usize>) -> bool {
        let word = self.reduced_word(w);
        word.len() == subset.len() && word.iter().copied().collect::<BTreeSet<_>>() == *subset
    }

    /// Pairings `<alpha_i, w lambda>` of `w lambda` with the simple roots,
    /// given the pairings of `lambda`.
    pub fn act_on_pairings(&self, w: &WeylElement, pairings: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let d = &self.rs.symmetrizer;
        // <alpha_i, w lambda> = <w^{-1} alpha_i, lambda>; in root coordinates
        // w^{-1} alpha_i has entries inv[k][i] * d_i / d_k.
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| (w.inv[k][i] as i64 * d[i] / d[k]) * pairings[k])
                    .sum()
            })
            .collect()
    }

    /// The order of `W`, from the known classification.
    pub fn order(&self) -> usize {
        let n = self.rank();
        let fact = |m: usize| (1..=m).product::<usize>();
        match self.rs.letter() {
            TypeLetter::A => fact(n + 1),
            TypeLetter::B | TypeLetter::C => (1 << n) * fact(n),
            TypeLetter::D => (1 << (n - 1)) * fact(n),
            TypeLetter::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            TypeLetter::F => 1152,
            TypeLetter::G => 12,
        }
    }

    /// Degrees of the basic invariants, read off from the root heights: the
    /// number of exponents equal to `m` is `#(height m) - #(height m+1)`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut by_height: HashMap<i64, usize> = HashMap::new();
        for r in &self.rs.positive_roots {
            *by_height.entry(r.iter().sum()).or_default() += 1;
        }
        let max = by_height.keys().copied().max().unwrap_or(0);
        let mut degrees = Vec::new();
        for m in 1..=max {
            let here = by_height.get(&m).copied().unwrap_or(0);
            let next = by_height.get(&(m + 1)).copied().unwrap_or(0);
            for _ in 0..here.saturating_sub(next) {
                degrees.push(m as usize + 1);
            }
        }
        degrees
    }

    /// Breadth-first closure from the identity under right multiplication
    /// by simple reflections.
    pub fn enumerate(&self, cap: usize) -> Result<EnumeratedGroup> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded {
                what: format!("Weyl group {}", self.rs.name()),
                required: order,
                cap,
            });
        }
        let id = self.identity();
        let mut elements = vec![id];
        let mut lengths = vec![0u32];
        let mut index = HashMap::with_capacity(order);
        index.insert(self.key(&id), 0u32);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head];
            let l = lengths[head];
            head += 1;
            for i in 1..=self.rank() {
                if w.has_right_descent(i) {
                    continue;
                }
                let v = w.mul(&self.gens[i - 1]);
                let k = self.key(&v);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    e.insert(elements.len() as u32);
                    elements.push(v);
                    lengths.push(l + 1);
                }
            }
        }
        Ok(EnumeratedGroup {
            weyl: self.clone(),
            elements,
            lengths,
            index,
            reflection_table: OnceLock::new(),
        })
    }

    /// The `sigma_0`-twisted class `{u w sigma_0(u)^{-1}}` of `w`, closed under
    /// simple reflections without enumerating `W`.
    pub fn twisted_class(
        &self,
        w: &WeylElement,
        sigma0: &DiagramAutomorphism,
        cap: usize,
    ) -> Result<TwistedClass> {
        let n = self.rank();
        let twisted: Vec<(WeylElement, WeylElement)> = (1..=n)
            .map(|i| (self.gens[i - 1], self.gens[sigma0.apply(i) - 1]))
            .collect();
        let mut seen: HashSet<ElementKey> = HashSet::new();
        seen.insert(self.key(w));
        let mut members = vec![*w];
        let mut frontier = vec![*w];
        while !frontier.is_empty() {
            let candidates: Vec<(ElementKey, WeylElement)> = frontier
                .par_iter()
                .flat_map_iter(|v| {
                    twisted.iter().map(move |(s, t)| {
                        let u = s.mul(v).mul(t);
                        (self.key(&u), u)
                    })
                })
                .collect();
            frontier = Vec::new();
            for (k, u) in candidates {
                if seen.insert(k) {
                    members.push(u);
                    frontier.push(u);
                }
            }
            if members.len() > cap {
                return Err(Error::CapExceeded {
                    what: format!("twisted class in {}", self.rs.name()),
                    required: members.len(),
                    cap,
                });
            }
        }
        let mut stats: Vec<(ElementKey, WeylElement, usize, usize)> = members
            .par_iter()
            .map(|u| (self.key(u), *u, self.length(u), self.reflection_length(u)))
            .collect();
        stats.sort_by_key(|s| s.0);
        let min_length = stats.iter().map(|s| s.2).min().unwrap_or(0);
        let min_reflection_length = stats.iter().map(|s| s.3).min().unwrap_or(0);
        let minimal_members = stats
            .iter()
            .filter(|s| s.2 == min_length)
            .map(|s| s.1)
            .collect();
        Ok(TwistedClass {
            base: *w,
            sigma0: sigma0.clone(),
            members: stats.into_iter().map(|s| s.1).collect(),
            min_length,
            min_reflection_length,
            minimal_members,
        })
    }
}

/// A `sigma_0`-twisted conjugacy class with its length statistics.
#[derive(Debug, Clone)]
pub struct TwistedClass {
    pub base: WeylElement,
    pub sigma0: DiagramAutomorphism,
    /// All members, sorted by canonical key.
    pub members: Vec<WeylElement>,
    pub min_length: usize,
    pub min_reflection_length: usize,
    /// Members of minimal length, sorted by canonical key.
    pub minimal_members: Vec<WeylElement>,
}

impl TwistedClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, weyl: &Weyl, w: &WeylElement) -> bool {
        let k = weyl.key(w);
        self.members
            .binary_search_by_key(&k, |m| weyl.key(m))
            .is_ok()
    }
}

/// Serializable view of an element: a reduced word of 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WordJson(pub Vec<usize>);

/// Fully enumerated Weyl group, indexed in breadth-first order (so index 0
/// is the identity and lengths are non-decreasing).
#[derive(Debug)]
pub struct EnumeratedGroup {
    weyl: Weyl,
    elements: Vec<WeylElement>,
    lengths: Vec<u32>,
    index: HashMap<ElementKey, u32>,
    reflection_table: OnceLock<Vec<u32>>,
}

impl EnumeratedGroup {
    pub fn weyl(&self) -> &Weyl {
        &self.weyl
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Length, read off from breadth-first depth.
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[&self.weyl.key(w)] as usize
    }

    /// `reflection_table()[i * N + a]` is the index of `w_i s_{alpha_a}`.
    pub fn reflection_table(&self) -> &[u32] {
        self.reflection_table.get_or_init(|| {
            let refl: Vec<WeylElement> = (0..self.weyl.rs.num_positive_roots())
                .map(|a| self.weyl.reflection(a))
                .collect();
            self.elements
                .par_iter()
                .flat_map_iter(|w| {
                    refl.iter()
                        .map(move |r| self.index[&self.weyl.key(&w.mul(r))])
                })
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{all_types, CartanDatum};

    fn weyl(l: TypeLetter, n: usize) -> Weyl {
        Weyl::of_type(l, n).unwrap()
    }

    #[test]
    fn group_orders_by_enumeration() {
        use TypeLetter::*;
        for (l, n, order) in [(A, 3, 24), (B, 3, 48), (D, 4, 192), (G, 2, 12), (F, 4, 1152)] {
            let w = weyl(l, n);
            assert_eq!(w.enumerate(DEFAULT_GROUP_CAP).unwrap().len(), order);
            assert_eq!(w.order(), order);
        }
    }

    #[test]
    fn e6_order_matches_degrees() {
        let w = weyl(TypeLetter::E, 6);
        let g = w.enumerate(DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.len(), 51_840);
        assert_eq!(w.degrees(), vec![2, 5, 6, 8, 9, 12]);
        assert_eq!(w.degrees().iter().product::<usize>(), 51_840);
    }

    #[test]
    fn degrees_multiply_to_order() {
        for (l, n) in all_types(8) {
            let w = weyl(l, n);
            assert_eq!(w.degrees().iter().product::<usize>(), w.order(), "{l}{n}");
            assert_eq!(w.degrees().len(), n);
        }
    }

    #[test]
    fn cap_refusal_names_required_size() {
        let err = weyl(TypeLetter::E, 7).enumerate(DEFAULT_GROUP_CAP).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "Weyl group E7".into(),
                required: 2_903_040,
                cap: DEFAULT_GROUP_CAP
            }
        );
    }

    #[test]
    fn length_examples() {
        let a2 = weyl(TypeLetter::A, 2);
        assert_eq!(a2.length(&a2.identity()), 0);
        assert_eq!(a2.length(&a2.from_word(&[1, 2]).unwrap()), 2);
        let a3 = weyl(TypeLetter::A, 3);
        assert_eq!(a3.length(&a3.longest_element()), 6);
    }

    #[test]
    fn inversion_count_matches_bfs_depth() {
        use TypeLetter::*;
        for (l, n) in [(A, 3), (B, 3), (D, 4), (G, 2)] {
            let w = weyl(l, n);
            let g = w.enumerate(DEFAULT_GROUP_CAP).unwrap();
            for i in 0..g.len() {
                assert_eq!(w.length(g.element(i)), g.length(i));
                assert_eq!(w.reduced_word(g.element(i)).len(), g.length(i));
                assert_eq!(w.from_word(&w.reduced_word(g.element(i))).unwrap(), *g.element(i));
            }
        }
    }

    #[test]
    fn longest_elements() {
        let a2 = weyl(TypeLetter::A, 2);
        let w0 = a2.longest_element();
        assert_eq!(w0, a2.from_word(&[1, 2, 1]).unwrap());
        assert!(w0.mul(&w0).is_identity());
        assert!(a2.longest_parabolic(&[]).is_identity());
        let b3 = weyl(TypeLetter::B, 3);
        let w = b3.longest_parabolic(&[1, 2]);
        assert_eq!(b3.length(&w), 3);
        assert!(w.mul(&w).is_identity());
        assert_eq!(b3.length(&b3.longest_element()), 9);
    }

    #[test]
    fn zeta_closed_forms() {
        // A_n: zeta_1 = s_1 ... s_n, zeta_i = zeta_1^i
        for n in 1..=6 {
            let w = weyl(TypeLetter::A, n);
            let z1 = w.zeta(1).unwrap();
            let word: Vec<usize> = (1..=n).collect();
            assert_eq!(z1, w.from_word(&word).unwrap());
            let mut p = z1;
            for i in 2..=n {
                p = p.mul(&z1);
                assert_eq!(w.zeta(i).unwrap(), p, "A{n} i={i}");
            }
        }
        // B_n: zeta_1 = s_[1,n-1] s_n s_[1,n-1]^{-1}
        for n in 2..=6 {
            let w = weyl(TypeLetter::B, n);
            let mut word: Vec<usize> = (1..n).collect();
            word.push(n);
            word.extend((1..n).rev());
            assert_eq!(w.zeta(1).unwrap(), w.from_word(&word).unwrap());
        }
        // C_n: zeta_n = s_n s_[n-1,n] ... s_[1,n]
        for n in 2..=6 {
            let w = weyl(TypeLetter::C, n);
            let mut word = Vec::new();
            for a in (1..=n).rev() {
                word.extend(a..=n);
            }
            assert_eq!(w.zeta(n).unwrap(), w.from_word(&word).unwrap());
        }
        // D_n: zeta_1 = s_[1,n-2] s_[1,n]^{-1}
        for n in 4..=7 {
            let w = weyl(TypeLetter::D, n);
            let mut word: Vec<usize> = (1..=n - 2).collect();
            word.extend((1..=n).rev());
            assert_eq!(w.zeta(1).unwrap(), w.from_word(&word).unwrap());
        }
        let e6 = weyl(TypeLetter::E, 6);
        let word: Vec<usize> = "1345624534132456"
            .bytes()
            .map(|b| (b - b'0') as usize)
            .collect();
        assert_eq!(e6.zeta(1).unwrap(), e6.from_word(&word).unwrap());
        let e7 = weyl(TypeLetter::E, 7);
        let word: Vec<usize> = "765432456713456245341324567"
            .bytes()
            .map(|b| (b - b'0') as usize)
            .collect();
        assert_eq!(e7.zeta(7).unwrap(), e7.from_word(&word).unwrap());
    }

    #[test]
    fn zeta_rejects_non_minuscule() {
        let b3 = weyl(TypeLetter::B, 3);
        assert_eq!(b3.zeta(2).unwrap_err(), Error::NotMinuscule(2));
        assert!(b3.zeta(7).is_err());
    }

    #[test]
    fn reflection_length_examples() {
        let a2 = weyl(TypeLetter::A, 2);
        assert_eq!(a2.reflection_length(&a2.identity()), 0);
        assert_eq!(a2.reflection_length(&a2.longest_element()), 1);
        let a3 = weyl(TypeLetter::A, 3);
        assert_eq!(a3.reflection_length(&a3.longest_element()), 2);
        for (l, n) in all_types(5) {
            let w = weyl(l, n);
            for a in 0..w.root_system().num_positive_roots() {
                let r = w.reflection(a);
                assert_eq!(w.reflection_length(&r), 1);
                assert!(r.mul(&r).is_identity());
            }
        }
    }

    #[test]
    fn twisted_class_examples() {
        let a2 = weyl(TypeLetter::A, 2);
        let id = DiagramAutomorphism::identity(2);
        let c = a2.twisted_class(&a2.identity(), &id, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(c.len(), 1);
        let c = a2
            .twisted_class(&a2.generator(1), &id, DEFAULT_CLASS_CAP)
            .unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.min_length, 1);
        assert_eq!(c.minimal_members.len(), 2);
    }

    #[test]
    fn twisted_class_closure_from_any_member() {
        let a3 = weyl(TypeLetter::A, 3);
        let flip = DiagramAutomorphism::flip(&CartanDatum::new(TypeLetter::A, 3).unwrap()).unwrap();
        let z = a3.zeta(1).unwrap();
        let c = a3.twisted_class(&z, &flip, DEFAULT_CLASS_CAP).unwrap();
        for m in &c.members {
            let c2 = a3.twisted_class(m, &flip, DEFAULT_CLASS_CAP).unwrap();
            assert_eq!(c2.members, c.members);
        }
    }

    #[test]
    fn class_cap_refusal() {
        let a3 = weyl(TypeLetter::A, 3);
        let id = DiagramAutomorphism::identity(3);
        let err = a3.twisted_class(&a3.generator(1), &id, 2).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 2, .. }));
    }

    #[test]
    fn coxeter_detection() {
        let a3 = weyl(TypeLetter::A, 3);
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert!(a3.is_coxeter_of(&a3.identity(), &set(&[])));
        assert!(a3.is_coxeter_of(&a3.from_word(&[1, 3]).unwrap(), &set(&[1, 3])));
        let a2 = weyl(TypeLetter::A, 2);
        let w = a2.from_word(&[1, 2, 1]).unwrap();
        for j in [set(&[]), set(&[1]), set(&[1, 2])] {
            assert!(!a2.is_coxeter_of(&w, &j));
        }
    }

    #[test]
    fn automorphism_action() {
        let d = CartanDatum::new(TypeLetter::A, 3).unwrap();
        let a3 = weyl(TypeLetter::A, 3);
        let flip = DiagramAutomorphism::flip(&d).unwrap();
        assert_eq!(a3.apply_automorphism(&flip, &a3.generator(1)), a3.generator(3));
        let id = DiagramAutomorphism::identity(3);
        let w = a3.from_word(&[1, 2, 3, 1]).unwrap();
        assert_eq!(a3.apply_automorphism(&id, &w), w);
        // in type A the flip is conjugation by w_0
        let w0 = a3.longest_element();
        let g = a3.enumerate(DEFAULT_GROUP_CAP).unwrap();
        for x in g.elements() {
            let y = a3.apply_automorphism(&flip, x);
            assert_eq!(y, w0.mul(x).mul(&w0));
            assert_eq!(a3.length(&y), a3.length(x));
        }
    }

    #[test]
    fn pairing_action_matches_coweight_action() {
        for (l, n) in [(TypeLetter::B, 3), (TypeLetter::G, 2), (TypeLetter::C, 3), (TypeLetter::F, 4)] {
            let w = weyl(l, n);
            let rs = w.root_system().clone();
            let g = w.enumerate(DEFAULT_GROUP_CAP).unwrap();
            let lambda = vec![3, -1, 2, 5][..n].to_vec();
            let v = rs.coweight_from_pairings(&lambda);
            for x in g.elements().iter().step_by(7) {
                let direct = rs.integral_pairings(&x.act_coweight(&v)).unwrap();
                assert_eq!(w.act_on_pairings(x, &lambda), direct);
            }
        }
    }
}
