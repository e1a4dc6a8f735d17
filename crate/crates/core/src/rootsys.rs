//! Root-system data for the simple types `A_p` through `G_2`.
//!
//! Roots are integer vectors in the basis of simple roots (Bourbaki numbering),
//! and the invariant form is normalized so that long roots have squared length 2.
//! Positive roots are indexed by increasing height; indices `0..p` are the
//! simple roots in order and the last index is the highest root.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::{RootSet, MAX_ROOTS};
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub const ALL: [CartanType; 7] = [
        CartanType::A,
        CartanType::B,
        CartanType::C,
        CartanType::D,
        CartanType::E,
        CartanType::F,
        CartanType::G,
    ];

    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A | CartanType::D | CartanType::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            _ => Err(Error::Parse {
                what: "root system type",
                input: s.to_string(),
            }),
        }
    }
}

/// Immutable database of one irreducible root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    roots: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    heights: Vec<u32>,
    gram: Vec<Vec<Q>>,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    long: Vec<bool>,
    coxeter_number: u32,
    exponents: Vec<u32>,
    rho_coweight: Vec<Q>,
    fundamental_coweights: Vec<Vec<Q>>,
    sums: Vec<Option<u16>>,
    up: Vec<RootSet>,
    down: Vec<RootSet>,
}

/// Simple-root squared lengths and Dynkin edges (0-based) for a type.
fn dynkin(t: CartanType, p: usize) -> Result<(Vec<Q>, Vec<(usize, usize)>)> {
    let bad = |reason| Error::InvalidSystem {
        label: t.to_string(),
        rank: p,
        reason,
    };
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    let two = q(2);
    let one = q(1);
    Ok(match t {
        CartanType::A => {
            if p < 1 {
                return Err(bad("type A needs rank at least 1"));
            }
            (vec![two; p], chain(p))
        }
        CartanType::B => {
            if p < 2 {
                return Err(bad("type B needs rank at least 2"));
            }
            let mut len = vec![two; p];
            len[p - 1] = one;
            (len, chain(p))
        }
        CartanType::C => {
            if p < 2 {
                return Err(bad("type C needs rank at least 2"));
            }
            let mut len = vec![one; p];
            len[p - 1] = two;
            (len, chain(p))
        }
        CartanType::D => {
            if p < 3 {
                return Err(bad("type D needs rank at least 3"));
            }
            let mut edges = chain(p - 1);
            edges.push((p - 3, p - 1));
            (vec![two; p], edges)
        }
        CartanType::E => {
            if !(6..=8).contains(&p) {
                return Err(bad("type E exists only in ranks 6, 7, 8"));
            }
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..p - 1).map(|i| (i, i + 1)));
            (vec![two; p], edges)
        }
        CartanType::F => {
            if p != 4 {
                return Err(bad("type F exists only in rank 4"));
            }
            (vec![two, two, one, one], chain(4))
        }
        CartanType::G => {
            if p != 2 {
                return Err(bad("type G exists only in rank 2"));
            }
            (vec![Q::new(2, 3), two], chain(2))
        }
    })
}

impl RootSystem {
    /// Builds the root system of type `t` and rank `p`.
    pub fn new(t: CartanType, p: usize) -> Result<Self> {
        let (sq_len, edges) = dynkin(t, p)?;

        let mut gram = vec![vec![q(0); p]; p];
        for i in 0..p {
            gram[i][i] = sq_len[i];
        }
        for &(i, j) in &edges {
            // The longer of two adjacent simple roots fixes the bond.
            let v = -std::cmp::max(sq_len[i], sq_len[j]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        let c = q(2) * gram[j][i] / sq_len[i];
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();

        let roots = close_under_strings(p, &cartan);
        if roots.len() > MAX_ROOTS {
            return Err(Error::InvalidSystem {
                label: t.to_string(),
                rank: p,
                reason: "too many positive roots for the bitset capacity",
            });
        }
        let index: HashMap<Vec<i32>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let heights: Vec<u32> = roots.iter().map(|r| r.iter().sum::<i32>() as u32).collect();
        let n = roots.len();

        let coxeter_number = heights[n - 1] + 1;
        let exponents = exponents_from_heights(&heights);

        let inv = linalg::inverse(&gram).expect("Gram matrix of a root system is nonsingular");
        let fundamental_coweights: Vec<Vec<Q>> =
            (0..p).map(|i| (0..p).map(|k| inv[k][i]).collect()).collect();
        let rho_coweight: Vec<Q> = (0..p)
            .map(|k| fundamental_coweights.iter().map(|pi| pi[k]).sum())
            .collect();

        let mut sums = vec![None; n * n];
        let mut buf = vec![0i32; p];
        for a in 0..n {
            for b in 0..n {
                for k in 0..p {
                    buf[k] = roots[a][k] + roots[b][k];
                }
                sums[a * n + b] = index.get(&buf).map(|&i| i as u16);
            }
        }

        let mut up = vec![RootSet::new(); n];
        let mut down = vec![RootSet::new(); n];
        for a in 0..n {
            for b in 0..n {
                if roots[a].iter().zip(&roots[b]).all(|(x, y)| x <= y) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }

        let theta_len: Q = quad(&gram, &roots[n - 1], &roots[n - 1]);
        let long = roots.iter().map(|r| quad(&gram, r, r) == theta_len).collect();

        Ok(RootSystem {
            cartan_type: t,
            rank: p,
            roots,
            index,
            heights,
            gram,
            cartan,
            long,
            coxeter_number,
            exponents,
            rho_coweight,
            fundamental_coweights,
            sums,
            up,
            down,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<i32>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i32] {
        &self.roots[i]
    }

    pub fn root_index(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the simple root `alpha_{i+1}`.
    pub fn simple(&self, i: usize) -> usize {
        i
    }

    pub fn is_simple(&self, i: usize) -> bool {
        i < self.rank
    }

    pub fn simple_set(&self) -> RootSet {
        RootSet::first_n(self.rank)
    }

    pub fn all_roots(&self) -> RootSet {
        RootSet::first_n(self.roots.len())
    }

    pub fn highest_root(&self) -> usize {
        self.roots.len() - 1
    }

    /// Coefficients `m_i` of the highest root.
    pub fn marks(&self) -> &[i32] {
        &self.roots[self.roots.len() - 1]
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn rho_coweight(&self) -> &[Q] {
        &self.rho_coweight
    }

    pub fn fundamental_coweights(&self) -> &[Vec<Q>] {
        &self.fundamental_coweights
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights[i]
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.long[i]
    }

    /// Index of `gamma + nu` when it is a positive root.
    #[inline]
    pub fn root_sum(&self, gamma: usize, nu: usize) -> Option<usize> {
        self.sums[gamma * self.roots.len() + nu].map(usize::from)
    }

    /// Roots `nu` with `gamma <= nu` in the root order, `gamma` included.
    #[inline]
    pub fn up_set(&self, gamma: usize) -> &RootSet {
        &self.up[gamma]
    }

    /// Roots `nu` with `nu <= gamma` in the root order, `gamma` included.
    #[inline]
    pub fn down_set(&self, gamma: usize) -> &RootSet {
        &self.down[gamma]
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Exact inner product of two rational vectors.
    pub fn inner(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = q(0);
        for i in 0..self.rank {
            if x[i] == q(0) {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// Inner product of two integer vectors (e.g. roots).
    pub fn inner_int(&self, x: &[i32], y: &[i32]) -> Q {
        quad(&self.gram, x, y)
    }

    /// `<x, alpha_i^vee>` for an integer vector `x`.
    pub fn coroot_pairing(&self, x: &[i32], i: usize) -> i64 {
        self.cartan[i]
            .iter()
            .zip(x)
            .map(|(c, &v)| c * v as i64)
            .sum()
    }

    /// Coordinates of `x` in the basis of simple coroots.
    pub fn coroot_coords(&self, x: &[Q]) -> Vec<Q> {
        (0..self.rank).map(|i| x[i] * self.gram[i][i] / 2).collect()
    }

    pub fn in_coroot_lattice(&self, x: &[Q]) -> bool {
        linalg::is_integral(&self.coroot_coords(x))
    }

    /// Whether the root is supported on the given simple-root indices.
    pub fn supported_on(&self, root: usize, simple: &[bool]) -> bool {
        self.roots[root]
            .iter()
            .zip(simple)
            .all(|(&c, &keep)| c == 0 || keep)
    }

    /// Roots of height exactly `k`.
    pub fn roots_of_height(&self, k: u32) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.heights[i] == k).collect()
    }

    /// Renders a root in the compact `1121` notation.
    pub fn format_root(&self, i: usize) -> String {
        format_coords(&self.roots[i])
    }
}

pub fn format_coords(c: &[i32]) -> String {
    if c.iter().all(|&x| (0..10).contains(&x)) {
        c.iter().map(|x| x.to_string()).collect()
    } else {
        format!(
            "[{}]",
            c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

fn quad(gram: &[Vec<Q>], x: &[i32], y: &[i32]) -> Q {
    let mut s = q(0);
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            if b != 0 {
                s += gram[i][j] * (a as i64 * b as i64);
            }
        }
    }
    s
}

/// Generates the positive roots from the simple ones using root strings.
fn close_under_strings(p: usize, cartan: &[Vec<i64>]) -> Vec<Vec<i32>> {
    let mut found: HashMap<Vec<i32>, ()> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..p {
        let mut e = vec![0; p];
        e[i] = 1;
        found.insert(e.clone(), ());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..p {
            let pairing: i64 = cartan[i].iter().zip(&beta).map(|(c, &b)| c * b as i64).sum();
            let mut down = 0;
            let mut probe = beta.clone();
            loop {
                probe[i] -= 1;
                if probe[i] < 0 || !found.contains_key(&probe) {
                    break;
                }
                down += 1;
            }
            if down - pairing > 0 {
                let mut next = beta.clone();
                next[i] += 1;
                if !found.contains_key(&next) {
                    found.insert(next.clone(), ());
                    queue.push_back(next);
                }
            }
        }
        order.push(beta);
    }
    order.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    order
}

/// Exponents as the partition dual to the height distribution.
fn exponents_from_heights(heights: &[u32]) -> Vec<u32> {
    let max = *heights.iter().max().unwrap();
    let count = |k: u32| heights.iter().filter(|&&h| h == k).count();
    let mut exps = Vec::new();
    for k in 1..=max {
        let here = count(k) - count(k + 1);
        exps.extend(std::iter::repeat_n(k, here));
    }
    exps
}

/// Every valid `(type, rank)` pair with rank at most `max_rank`.
pub fn all_systems(max_rank: usize) -> Vec<(CartanType, usize)> {
    let mut out = Vec::new();
    for t in CartanType::ALL {
        for p in 1..=max_rank {
            if dynkin(t, p).is_ok() {
                out.push((t, p));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: CartanType, p: usize) -> RootSystem {
        RootSystem::new(t, p).unwrap()
    }

    #[test]
    fn a2_basic_data() {
        let a2 = rs(CartanType::A, 2);
        assert_eq!(a2.roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.coxeter_number(), 3);
        assert_eq!(a2.exponents(), &[1, 2]);
        assert_eq!(a2.inner_int(&[1, 0], &[0, 1]), q(-1));
        assert_eq!(a2.root_sum(0, 1), Some(2));
        assert_eq!(a2.root_sum(2, 0), None);
    }

    #[test]
    fn c3_roots_match_symplectic_array() {
        let c3 = rs(CartanType::C, 3);
        assert_eq!(c3.num_positive_roots(), 9);
        assert_eq!(c3.coxeter_number(), 6);
        assert_eq!(c3.exponents(), &[1, 3, 5]);
        let a23 = c3.root_index(&[0, 1, 1]).unwrap();
        let a2 = c3.root_index(&[0, 1, 0]).unwrap();
        let two_a2_a3 = c3.root_index(&[0, 2, 1]).unwrap();
        assert_eq!(c3.root_sum(a23, a2), Some(two_a2_a3));
        assert!(c3.is_long(two_a2_a3));
        assert!(!c3.is_long(a23));
        assert_eq!(c3.marks(), &[2, 2, 1]);
    }

    #[test]
    fn e8_has_120_positive_roots() {
        let e8 = rs(CartanType::E, 8);
        assert_eq!(e8.num_positive_roots(), 120);
        assert_eq!(e8.coxeter_number(), 30);
        assert_eq!(e8.exponents(), &[1, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn exponent_tables() {
        let cases: &[(CartanType, usize, &[u32])] = &[
            (CartanType::B, 4, &[1, 3, 5, 7]),
            (CartanType::D, 4, &[1, 3, 3, 5]),
            (CartanType::D, 5, &[1, 3, 4, 5, 7]),
            (CartanType::E, 6, &[1, 4, 5, 7, 8, 11]),
            (CartanType::E, 7, &[1, 5, 7, 9, 11, 13, 17]),
            (CartanType::F, 4, &[1, 5, 7, 11]),
            (CartanType::G, 2, &[1, 5]),
        ];
        for &(t, p, e) in cases {
            assert_eq!(rs(t, p).exponents(), e, "{t}{p}");
        }
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        for (t, p) in [
            (CartanType::A, 0),
            (CartanType::B, 1),
            (CartanType::C, 1),
            (CartanType::D, 2),
            (CartanType::E, 5),
            (CartanType::E, 9),
            (CartanType::F, 3),
            (CartanType::G, 3),
        ] {
            assert!(matches!(
                RootSystem::new(t, p),
                Err(Error::InvalidSystem { .. })
            ));
        }
    }

    #[test]
    fn structural_invariants_all_small_systems() {
        for (t, p) in all_systems(8) {
            let s = rs(t, p);
            let n = s.num_positive_roots();
            let h = s.coxeter_number() as usize;
            assert_eq!(2 * n, p * h, "{t}{p}");
            assert_eq!(s.exponents().iter().sum::<u32>() as usize, n);
            assert_eq!(s.marks().iter().sum::<i32>() as usize, h - 1);
            assert_eq!(s.height(s.highest_root()) as usize, h - 1);
            let theta = s.root(s.highest_root()).to_vec();
            assert_eq!(s.inner_int(&theta, &theta), q(2));
            for i in 0..n {
                assert!(s.root(i).iter().all(|&c| c >= 0));
                assert!(s.inner_int(s.root(i), s.root(i)) <= q(2));
            }
            for i in 0..p {
                let mut e = vec![0; p];
                e[i] = 1;
                assert_eq!(s.root(i), &e[..]);
                let alpha: Vec<Q> = e.iter().map(|&x| q(x as i64)).collect();
                for j in 0..p {
                    let want = if i == j { q(1) } else { q(0) };
                    let mut ej = vec![q(0); p];
                    ej[j] = q(1);
                    assert_eq!(s.inner(&s.fundamental_coweights()[i], &ej), want);
                }
                assert_eq!(s.inner(s.rho_coweight(), &alpha), q(1));
            }
        }
    }

    #[test]
    fn root_sum_finds_every_sum() {
        for (t, p) in all_systems(8) {
            let s = rs(t, p);
            let n = s.num_positive_roots();
            for a in 0..n {
                for b in 0..n {
                    let v: Vec<i32> = s.root(a).iter().zip(s.root(b)).map(|(x, y)| x + y).collect();
                    assert_eq!(s.root_sum(a, b), s.root_index(&v));
                }
            }
        }
    }

    #[test]
    fn type_labels_parse() {
        assert_eq!("e".parse::<CartanType>().unwrap(), CartanType::E);
        assert!("X".parse::<CartanType>().is_err());
    }
}
