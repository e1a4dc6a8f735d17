//! Affine Weyl group elements attached to ideals and the simplex of
//! coroot-lattice points parametrizing them.
//!
//! Elements act linearly on `V ⊕ Qδ`. A translation acts by
//! `t_r(x) = x - (x, r)δ` and an element factors as `w = v · t_r` with `v` in
//! the finite Weyl group. The inversion set is
//! `N(w) = { a > 0 : w(a) < 0 }`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::linalg::{q, Q};
use crate::rootsys::RootSystem;

/// Real affine root `finite + level·δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub finite: Vec<i32>,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(finite: Vec<i32>, level: i64) -> Self {
        AffineRoot { finite, level }
    }

    /// `level > 0`, or `level == 0` with a positive finite part.
    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && finite_is_positive(&self.finite))
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot {
            finite: self.finite.iter().map(|x| -x).collect(),
            level: -self.level,
        }
    }

    /// The affine simple root `alpha_i` (`i = 0` is `δ - θ`).
    pub fn simple(rs: &RootSystem, i: usize) -> AffineRoot {
        if i == 0 {
            let theta = rs.root(rs.highest_root());
            AffineRoot::new(theta.iter().map(|x| -x).collect(), 1)
        } else {
            let mut e = vec![0; rs.rank()];
            e[i - 1] = 1;
            AffineRoot::new(e, 0)
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:+}δ", self.finite, self.level)
    }
}

fn finite_is_positive(x: &[i32]) -> bool {
    x.iter().any(|&c| c != 0) && x.iter().all(|&c| c >= 0)
}

/// Integer matrix on the basis `(alpha_1, ..., alpha_p, δ)`; column `j` is the
/// image of basis vector `j`.
#[derive(Clone, PartialEq, Eq)]
struct Mat {
    n: usize,
    a: Vec<i64>,
}

impl Mat {
    fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    #[inline]
    fn at(&self, r: usize, c: usize) -> i64 {
        self.a[r * self.n + c]
    }

    fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = self.at(r, k);
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    a[r * n + c] += x * o.at(k, c);
                }
            }
        }
        Mat { n, a }
    }

    fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.at(r, c) * x[c]).sum())
            .collect()
    }
}

/// Linear map of simple reflection `s_i` on `V ⊕ Qδ` (`i = 0` is `s_{α_0}`).
fn simple_reflection(rs: &RootSystem, i: usize) -> Mat {
    let p = rs.rank();
    let n = p + 1;
    let mut m = Mat::identity(n);
    if i == 0 {
        // s_0(x + cδ) = x - (x,θ)θ + (c + (x,θ))δ
        let theta = rs.root(rs.highest_root());
        for j in 0..p {
            let pair = rs.coroot_pairing_theta(j);
            for k in 0..p {
                m.a[k * n + j] -= pair * theta[k] as i64;
            }
            m.a[p * n + j] += pair;
        }
    } else {
        let s = i - 1;
        for j in 0..p {
            m.a[s * n + j] -= rs.cartan()[s][j];
        }
    }
    m
}

impl RootSystem {
    /// `(alpha_j, θ)`, an integer since `θ` is long of squared length 2.
    pub(crate) fn coroot_pairing_theta(&self, j: usize) -> i64 {
        let mut e = vec![0; self.rank()];
        e[j] = 1;
        let v = self.inner_int(&e, self.root(self.highest_root()));
        debug_assert!(v.is_integer());
        v.to_integer()
    }
}

/// Element `w = v · t_r` of the affine Weyl group.
#[derive(Clone)]
pub struct AffineWeylElement<'a> {
    rs: &'a RootSystem,
    mat: Mat,
    inv: Mat,
    length: usize,
}

impl PartialEq for AffineWeylElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.rs, other.rs) && self.mat == other.mat
    }
}

impl fmt::Debug for AffineWeylElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineWeylElement")
            .field("v", &self.finite_part())
            .field("r", &self.translation())
            .field("length", &self.length)
            .finish()
    }
}

impl<'a> AffineWeylElement<'a> {
    pub fn identity(rs: &'a RootSystem) -> Self {
        let m = Mat::identity(rs.rank() + 1);
        AffineWeylElement {
            rs,
            mat: m.clone(),
            inv: m,
            length: 0,
        }
    }

    /// Simple reflection `s_i`, with `i = 0` the affine one.
    pub fn simple_reflection(rs: &'a RootSystem, i: usize) -> Self {
        let m = simple_reflection(rs, i);
        AffineWeylElement {
            rs,
            mat: m.clone(),
            inv: m,
            length: 1,
        }
    }

    /// Pure translation `t_r`, with `r` given in simple-root coordinates.
    pub fn translation_by(rs: &'a RootSystem, r: &[i64]) -> Result<Self> {
        let rq: Vec<Q> = r.iter().map(|&x| q(x)).collect();
        if !rs.in_coroot_lattice(&rq) {
            return Err(Error::BadCoordinates(format!("{r:?} is not in the coroot lattice")));
        }
        let p = rs.rank();
        let n = p + 1;
        let mut mat = Mat::identity(n);
        let mut inv = Mat::identity(n);
        for j in 0..p {
            let mut e = vec![q(0); p];
            e[j] = q(1);
            let pair = rs.inner(&e, &rq).to_integer();
            mat.a[p * n + j] = -pair;
            inv.a[p * n + j] = pair;
        }
        Ok(Self::from_mats(rs, mat, inv))
    }

    fn from_mats(rs: &'a RootSystem, mat: Mat, inv: Mat) -> Self {
        let mut w = AffineWeylElement {
            rs,
            mat,
            inv,
            length: 0,
        };
        w.length = w.count_inversions();
        w
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineWeylElement<'a>) -> Self {
        Self::from_mats(self.rs, self.mat.mul(&other.mat), other.inv.mul(&self.inv))
    }

    pub fn inverse(&self) -> Self {
        AffineWeylElement {
            rs: self.rs,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
            length: self.length,
        }
    }

    pub fn system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Finite Weyl part `v` as a `p × p` matrix; column `j` is `v(alpha_j)`.
    pub fn finite_part(&self) -> Vec<Vec<i64>> {
        let p = self.rs.rank();
        (0..p).map(|r| (0..p).map(|c| self.mat.at(r, c)).collect()).collect()
    }

    /// Values `(alpha_j, r)` of the translation part.
    pub fn translation_pairing(&self) -> Vec<i64> {
        let p = self.rs.rank();
        (0..p).map(|j| -self.mat.at(p, j)).collect()
    }

    /// Translation part `r` in simple-root coordinates.
    pub fn translation(&self) -> Vec<i64> {
        let p = self.rs.rank();
        let pairing = self.translation_pairing();
        let coweights = self.rs.fundamental_coweights();
        (0..p)
            .map(|k| {
                let v: Q = (0..p).map(|i| q(pairing[i]) * coweights[i][k]).sum();
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    }

    /// Linear action on an affine root.
    pub fn apply(&self, a: &AffineRoot) -> AffineRoot {
        apply_mat(&self.mat, a)
    }

    pub fn apply_inverse(&self, a: &AffineRoot) -> AffineRoot {
        apply_mat(&self.inv, a)
    }

    /// Linear action of the finite part on a rational vector.
    pub fn apply_finite(&self, x: &[Q]) -> Vec<Q> {
        let p = self.rs.rank();
        (0..p)
            .map(|r| (0..p).map(|c| q(self.mat.at(r, c)) * x[c]).sum())
            .collect()
    }

    fn apply_finite_inverse(&self, x: &[Q]) -> Vec<Q> {
        let p = self.rs.rank();
        (0..p)
            .map(|r| (0..p).map(|c| q(self.inv.at(r, c)) * x[c]).sum())
            .collect()
    }

    /// Affine-linear action on `V`: `w ∘ y = v(y + r)`.
    pub fn act_affine(&self, y: &[Q]) -> Vec<Q> {
        let shifted: Vec<Q> = y
            .iter()
            .zip(self.translation())
            .map(|(a, b)| a + q(b))
            .collect();
        self.apply_finite(&shifted)
    }

    /// `w^{-1} ∘ y = v^{-1}(y) - r`.
    pub fn act_affine_inverse(&self, y: &[Q]) -> Vec<Q> {
        self.apply_finite_inverse(y)
            .into_iter()
            .zip(self.translation())
            .map(|(a, b)| a - q(b))
            .collect()
    }

    fn count_inversions(&self) -> usize {
        let mut count = 0usize;
        let pairing = self.translation_pairing();
        for gamma in self.rs.roots() {
            let a: i64 = gamma.iter().zip(&pairing).map(|(&g, &r)| g as i64 * r).sum();
            let image = self.apply(&AffineRoot::new(gamma.clone(), 0));
            let v_pos = finite_is_positive(&image.finite);
            // gamma + kδ, k >= 0, maps to v(gamma) + (k - a)δ.
            if a > 0 {
                count += a as usize;
            }
            if a >= 0 && !v_pos {
                count += 1;
            }
            // -gamma + kδ, k >= 1, maps to -v(gamma) + (k + a)δ.
            if -a > 1 {
                count += (-a - 1) as usize;
            }
            if -a >= 1 && v_pos {
                count += 1;
            }
        }
        count
    }

    /// `N(w)`, listed explicitly.
    pub fn inversion_set(&self) -> BTreeSet<AffineRoot> {
        let mut out = BTreeSet::new();
        let pairing = self.translation_pairing();
        for gamma in self.rs.roots() {
            let a: i64 = gamma.iter().zip(&pairing).map(|(&g, &r)| g as i64 * r).sum();
            let neg: Vec<i32> = gamma.iter().map(|x| -x).collect();
            for k in 0..=a.max(0) {
                let root = AffineRoot::new(gamma.clone(), k);
                if !self.apply(&root).is_positive() {
                    out.insert(root);
                }
            }
            for k in 1..=(-a).max(1) {
                let root = AffineRoot::new(neg.clone(), k);
                if !self.apply(&root).is_positive() {
                    out.insert(root);
                }
            }
        }
        out
    }

    /// `I_w = { γ ∈ Δ+ : δ - γ ∈ N(w) }`.
    pub fn ideal(&self) -> Ideal<'a> {
        let members = (0..self.rs.num_positive_roots())
            .filter(|&i| {
                let root = AffineRoot::new(self.rs.root(i).iter().map(|x| -x).collect(), 1);
                !self.apply(&root).is_positive()
            })
            .collect();
        Ideal::new(self.rs, members).expect("ideal of an admissible element is closed")
    }
}

fn apply_mat(m: &Mat, a: &AffineRoot) -> AffineRoot {
    let mut x: Vec<i64> = a.finite.iter().map(|&c| c as i64).collect();
    x.push(a.level);
    let y = m.apply(&x);
    let p = y.len() - 1;
    AffineRoot {
        finite: y[..p].iter().map(|&c| c as i32).collect(),
        level: y[p],
    }
}

/// `Φ = ⋃_k { kδ - γ : γ ∈ I_k }` over the lower central series.
pub fn phi_set(ideal: &Ideal<'_>) -> BTreeSet<AffineRoot> {
    let rs = ideal.system();
    let mut out = BTreeSet::new();
    for (k, term) in ideal.lower_central_series().iter().enumerate() {
        for g in term.members().iter() {
            out.insert(AffineRoot::new(
                rs.root(g).iter().map(|x| -x).collect(),
                k as i64 + 1,
            ));
        }
    }
    out
}

/// Recovers the unique `w` with `N(w) = Φ` by peeling affine simple roots.
///
/// With `u` the product of the reflections peeled so far, the residual set is
/// `N(w u^{-1})`, and `alpha_j` lies in it exactly when `u^{-1}(alpha_j) ∈ Φ`.
pub fn element_from_inversions<'a>(
    rs: &'a RootSystem,
    phi: &BTreeSet<AffineRoot>,
) -> Result<AffineWeylElement<'a>> {
    let p = rs.rank();
    let lookup: HashSet<&AffineRoot> = phi.iter().collect();
    let simples: Vec<AffineRoot> = (0..=p).map(|i| AffineRoot::simple(rs, i)).collect();
    let reflections: Vec<Mat> = (0..=p).map(|i| simple_reflection(rs, i)).collect();
    let mut u = Mat::identity(p + 1);
    let mut u_inv = Mat::identity(p + 1);
    let mut consumed: HashSet<AffineRoot> = HashSet::new();
    for step in 0..phi.len() {
        let found = (0..=p).find_map(|j| {
            let pre = apply_mat(&u_inv, &simples[j]);
            (lookup.contains(&pre) && !consumed.contains(&pre)).then_some((j, pre))
        });
        let Some((j, pre)) = found else {
            return Err(Error::NotBiclosed {
                peeled: step,
                total: phi.len(),
            });
        };
        consumed.insert(pre);
        u = reflections[j].mul(&u);
        u_inv = u_inv.mul(&reflections[j]);
    }
    let w = AffineWeylElement::from_mats(rs, u, u_inv);
    if w.length != phi.len() {
        return Err(Error::NotBiclosed {
            peeled: phi.len(),
            total: phi.len(),
        });
    }
    Ok(w)
}

/// The admissible element `w⟨I⟩`.
pub fn element_of_ideal<'a>(ideal: &Ideal<'a>) -> AffineWeylElement<'a> {
    element_from_inversions(ideal.system(), &phi_set(ideal))
        .expect("inversion sets of ideals are biclosed")
}

/// Both defining conditions of an admissible element.
pub fn is_admissible(w: &AffineWeylElement<'_>) -> bool {
    let rs = w.system();
    let p = rs.rank();
    let finite_ok = (1..=p).all(|i| w.apply(&AffineRoot::simple(rs, i)).is_positive());
    let affine_ok = (0..=p).all(|i| {
        let pre = w.apply_inverse(&AffineRoot::simple(rs, i));
        pre.is_positive() || (pre.level == -1 && finite_is_positive(&pre.finite))
    });
    finite_ok && affine_ok
}

fn is_negative_affine_simple(rs: &RootSystem, a: &AffineRoot) -> bool {
    let neg = a.neg();
    (0..=rs.rank()).any(|i| AffineRoot::simple(rs, i) == neg)
}

/// Whether `γ ∈ I_w` is a generator, via `w(δ - γ) ∈ -Π̂`.
pub fn generator_criterion(w: &AffineWeylElement<'_>, gamma: usize) -> Result<bool> {
    let rs = w.system();
    if !w.ideal().contains(gamma) {
        return Err(Error::NotInIdeal(gamma));
    }
    let root = AffineRoot::new(rs.root(gamma).iter().map(|x| -x).collect(), 1);
    Ok(is_negative_affine_simple(rs, &w.apply(&root)))
}

/// Number of affine simple roots `alpha` with `w^{-1}(alpha) < 0`.
pub fn negative_preimage_count(w: &AffineWeylElement<'_>) -> usize {
    let rs = w.system();
    (0..=rs.rank())
        .filter(|&i| !w.apply_inverse(&AffineRoot::simple(rs, i)).is_positive())
        .count()
}

/// Which form `w(alpha_0) + kδ` takes at the class of nilpotence `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassBranch {
    /// `w(alpha_0) + kδ ∈ Δ+`.
    PositiveRoot,
    /// `w(alpha_0) + kδ ∈ δ - Δ+`.
    DeltaMinusPositive,
}

/// Class of nilpotence read off from `w(alpha_0)`, with the branch realized.
pub fn class_criterion(w: &AffineWeylElement<'_>) -> (usize, Option<ClassBranch>) {
    let rs = w.system();
    if w.ideal().is_empty() {
        return (0, None);
    }
    let image = w.apply(&AffineRoot::simple(rs, 0));
    let (k, branch) = if finite_is_positive(&image.finite) {
        (-image.level, ClassBranch::PositiveRoot)
    } else {
        (1 - image.level, ClassBranch::DeltaMinusPositive)
    };
    (k as usize, Some(branch))
}

/// Point of `V` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub coords: Vec<Q>,
}

impl LatticePoint {
    pub fn in_coroot_lattice(&self, rs: &RootSystem) -> bool {
        rs.in_coroot_lattice(&self.coords)
    }
}

/// `d_w = v_w(r_w)` for an admissible element.
pub fn d_point(w: &AffineWeylElement<'_>) -> Result<LatticePoint> {
    if !is_admissible(w) {
        return Err(Error::NotAdmissible);
    }
    let r: Vec<Q> = w.translation().into_iter().map(q).collect();
    Ok(LatticePoint {
        coords: w.apply_finite(&r),
    })
}

/// Checks `w^{-1}(x) = v^{-1}(x) + (x, d)δ` on the affine simple roots and `δ`.
pub fn inverse_identity_holds(w: &AffineWeylElement<'_>, d: &LatticePoint) -> bool {
    let rs = w.system();
    let p = rs.rank();
    let delta = AffineRoot::new(vec![0; p], 1);
    if w.apply_inverse(&delta) != delta {
        return false;
    }
    (0..=p).all(|i| {
        let a = AffineRoot::simple(rs, i);
        let x: Vec<Q> = a.finite.iter().map(|&c| q(c as i64)).collect();
        let vx = w.apply_finite_inverse(&x);
        let want_level = q(a.level) + rs.inner(&x, &d.coords);
        let got = w.apply_inverse(&a);
        got.finite.iter().zip(&vx).all(|(&g, v)| q(g as i64) == *v) && q(got.level) == want_level
    })
}

fn simplex_values(rs: &RootSystem, d: &[Q]) -> (Vec<Q>, Q) {
    let p = rs.rank();
    let simple: Vec<Q> = (0..p)
        .map(|i| {
            let mut e = vec![q(0); p];
            e[i] = q(1);
            rs.inner(d, &e)
        })
        .collect();
    let theta: Vec<Q> = rs.root(rs.highest_root()).iter().map(|&c| q(c as i64)).collect();
    (simple, rs.inner(d, &theta))
}

/// `(d, alpha_i) >= -1` for all `i` and `(d, θ) <= 2`.
pub fn simplex_contains(rs: &RootSystem, d: &LatticePoint) -> bool {
    let (simple, theta) = simplex_values(rs, &d.coords);
    simple.iter().all(|&v| v >= q(-1)) && theta <= q(2)
}

/// Number of facet equations of the simplex that hold at `d`.
pub fn simplex_face_codim(rs: &RootSystem, d: &LatticePoint) -> usize {
    let (simple, theta) = simplex_values(rs, &d.coords);
    simple.iter().filter(|&&v| v == q(-1)).count() + usize::from(theta == q(2))
}

/// `-ρ∨` followed by `-ρ∨ + ((h+1)/m_i) π_i` for each `i`.
pub fn simplex_vertices(rs: &RootSystem) -> Vec<LatticePoint> {
    let h1 = rs.coxeter_number() as i64 + 1;
    let minus_rho: Vec<Q> = rs.rho_coweight().iter().map(|x| -x).collect();
    let mut out = vec![LatticePoint {
        coords: minus_rho.clone(),
    }];
    for (i, pi) in rs.fundamental_coweights().iter().enumerate() {
        let f = Q::new(h1, rs.marks()[i] as i64);
        out.push(LatticePoint {
            coords: minus_rho.iter().zip(pi).map(|(a, b)| a + f * b).collect(),
        });
    }
    out
}

/// All points of the coroot lattice inside the simplex, sorted.
///
/// Searches the coweight coordinates `a_i = (x, alpha_i) >= -1`, which are
/// integral on the coroot lattice and bounded by `sum m_i (a_i + 1) <= h + 1`,
/// then keeps the points that lie in the coroot lattice.
pub fn lattice_points_in_simplex(rs: &RootSystem) -> Vec<LatticePoint> {
    let p = rs.rank();
    let marks: Vec<i64> = rs.marks().iter().map(|&m| m as i64).collect();
    let budget = rs.coxeter_number() as i64 + 1;
    let mut out = Vec::new();
    let mut shifted = vec![0i64; p];
    fn rec(
        rs: &RootSystem,
        marks: &[i64],
        k: usize,
        left: i64,
        shifted: &mut Vec<i64>,
        out: &mut Vec<LatticePoint>,
    ) {
        if k == marks.len() {
            let coords: Vec<Q> = (0..marks.len())
                .map(|c| {
                    shifted
                        .iter()
                        .enumerate()
                        .map(|(i, &y)| q(y - 1) * rs.fundamental_coweights()[i][c])
                        .sum()
                })
                .collect();
            if rs.in_coroot_lattice(&coords) {
                out.push(LatticePoint { coords });
            }
            return;
        }
        let mut y = 0;
        while y * marks[k] <= left {
            shifted[k] = y;
            rec(rs, marks, k + 1, left - y * marks[k], shifted, out);
            y += 1;
        }
    }
    rec(rs, &marks, 0, budget, &mut shifted, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::enumerate_ideals;
    use crate::rootsys::{all_systems, CartanType};

    fn rs(t: CartanType, p: usize) -> RootSystem {
        RootSystem::new(t, p).unwrap()
    }

    #[test]
    fn heisenberg_element_is_translation_by_minus_theta() {
        for (t, p) in all_systems(8) {
            if p < 2 {
                continue;
            }
            let s = rs(t, p);
            let h = Ideal::heisenberg(&s);
            let w = element_of_ideal(&h);
            let minus_theta: Vec<i64> =
                s.root(s.highest_root()).iter().map(|&c| -(c as i64)).collect();
            let t_minus = AffineWeylElement::translation_by(&s, &minus_theta).unwrap();
            assert_eq!(w, t_minus, "{t}{p}");
            let theta: Vec<i64> = s.root(s.highest_root()).iter().map(|&c| -(c as i64)).collect();
            assert_eq!(w.translation(), theta);
            assert_eq!(class_criterion(&w), (2, Some(ClassBranch::DeltaMinusPositive)));
            let image = w.apply(&AffineRoot::simple(&s, 0));
            let plus_two = AffineRoot::new(image.finite.clone(), image.level + 2);
            assert_eq!(plus_two, AffineRoot::new(s.root(s.highest_root()).iter().map(|x| -x).collect(), 1));
            let d = d_point(&w).unwrap();
            let want: Vec<Q> = theta.iter().map(|&c| q(c)).collect();
            assert_eq!(d.coords, want);
        }
    }

    #[test]
    fn s0_equals_s_theta_times_translation() {
        let s = rs(CartanType::C, 3);
        let theta: Vec<i64> = s.root(s.highest_root()).iter().map(|&c| c as i64).collect();
        let minus: Vec<i64> = theta.iter().map(|x| -x).collect();
        let s0 = AffineWeylElement::simple_reflection(&s, 0);
        let t = AffineWeylElement::translation_by(&s, &minus).unwrap();
        // s_θ = s_0 t_{θ∨}, a finite element.
        let s_theta = s0.compose(&t.inverse());
        assert_eq!(s_theta.translation(), vec![0, 0, 0]);
        assert_eq!(s_theta.compose(&s0), t);
    }

    #[test]
    fn small_elements() {
        let a2 = rs(CartanType::A, 2);
        let empty = element_of_ideal(&Ideal::empty(&a2));
        assert_eq!(empty, AffineWeylElement::identity(&a2));
        assert!(is_admissible(&empty));
        let theta = Ideal::new(&a2, [2].into_iter().collect()).unwrap();
        let w = element_of_ideal(&theta);
        assert_eq!(w, AffineWeylElement::simple_reflection(&a2, 0));
        assert_eq!(w.length(), 1);
        assert!(!is_admissible(&AffineWeylElement::simple_reflection(&a2, 1)));
    }

    #[test]
    fn phi_of_a2_full_ideal() {
        let a2 = rs(CartanType::A, 2);
        let phi = phi_set(&Ideal::full(&a2));
        let want: BTreeSet<AffineRoot> = [
            AffineRoot::new(vec![-1, 0], 1),
            AffineRoot::new(vec![0, -1], 1),
            AffineRoot::new(vec![-1, -1], 1),
            AffineRoot::new(vec![-1, -1], 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(phi, want);
        assert!(phi_set(&Ideal::empty(&a2)).is_empty());
    }

    #[test]
    fn non_biclosed_sets_are_reported() {
        let a2 = rs(CartanType::A, 2);
        let bogus: BTreeSet<AffineRoot> = [AffineRoot::new(vec![1, 1], 0)].into_iter().collect();
        assert!(matches!(
            element_from_inversions(&a2, &bogus),
            Err(Error::NotBiclosed { peeled: 0, total: 1 })
        ));
    }

    #[test]
    fn round_trip_and_geometry_on_c3() {
        let c3 = rs(CartanType::C, 3);
        let mut points = BTreeSet::new();
        for ideal in enumerate_ideals(&c3) {
            let phi = phi_set(&ideal);
            let w = element_from_inversions(&c3, &phi).unwrap();
            assert_eq!(w.inversion_set(), phi);
            assert_eq!(w.ideal(), ideal);
            assert!(is_admissible(&w));
            let d = d_point(&w).unwrap();
            assert!(inverse_identity_holds(&w, &d));
            assert!(d.in_coroot_lattice(&c3));
            assert!(simplex_contains(&c3, &d));
            assert_eq!(simplex_face_codim(&c3, &d), ideal.gen());
            for g in ideal.members().iter() {
                assert_eq!(generator_criterion(&w, g).unwrap(), ideal.generators().contains(g));
            }
            assert_eq!(negative_preimage_count(&w), ideal.gen());
            assert_eq!(class_criterion(&w).0, ideal.class_of_nilpotence());
            points.insert(d);
        }
        assert_eq!(points.len(), 20);
        let lattice: BTreeSet<LatticePoint> = lattice_points_in_simplex(&c3).into_iter().collect();
        assert_eq!(points, lattice);
    }

    #[test]
    fn generator_criterion_rejects_outside_roots() {
        let a2 = rs(CartanType::A, 2);
        let w = element_of_ideal(&Ideal::new(&a2, [2].into_iter().collect()).unwrap());
        assert_eq!(generator_criterion(&w, 0), Err(Error::NotInIdeal(0)));
    }

    #[test]
    fn d_point_requires_admissible() {
        let a2 = rs(CartanType::A, 2);
        let s1 = AffineWeylElement::simple_reflection(&a2, 1);
        assert_eq!(d_point(&s1), Err(Error::NotAdmissible));
        let zero = d_point(&AffineWeylElement::identity(&a2)).unwrap();
        assert!(simplex_contains(&a2, &zero));
        assert_eq!(simplex_face_codim(&a2, &zero), 0);
    }

    #[test]
    fn a2_vertices() {
        let a2 = rs(CartanType::A, 2);
        let v = simplex_vertices(&a2);
        // ρ∨ = α1 + α2; π1 = (2α1 + α2)/3, π2 = (α1 + 2α2)/3.
        assert_eq!(v[0].coords, vec![q(-1), q(-1)]);
        assert_eq!(v[1].coords, vec![Q::new(5, 3), Q::new(1, 3)]);
        assert_eq!(v[2].coords, vec![Q::new(1, 3), Q::new(5, 3)]);
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(lattice_points_in_simplex(&rs(CartanType::A, 2)).len(), 5);
        assert_eq!(lattice_points_in_simplex(&rs(CartanType::G, 2)).len(), 8);
        assert_eq!(lattice_points_in_simplex(&rs(CartanType::F, 4)).len(), 105);
    }

    #[test]
    fn unique_integral_vertex_is_d_of_full_ideal() {
        for (t, p) in all_systems(8) {
            let s = rs(t, p);
            let integral: Vec<_> = simplex_vertices(&s)
                .into_iter()
                .filter(|v| v.in_coroot_lattice(&s))
                .collect();
            assert_eq!(integral.len(), 1, "{t}{p}");
            let d = d_point(&element_of_ideal(&Ideal::full(&s))).unwrap();
            assert_eq!(integral[0], d);
            assert_eq!(simplex_face_codim(&s, &d), p);
        }
    }

    #[test]
    fn both_class_branches_occur() {
        // The abelian case only realizes the positive-root branch; for class > 1
        // look for witnesses of each branch.
        let mut seen_pos = false;
        let mut seen_delta = false;
        for (t, p) in all_systems(4) {
            let s = rs(t, p);
            for ideal in enumerate_ideals(&s) {
                let w = element_of_ideal(&ideal);
                let (k, branch) = class_criterion(&w);
                if k == 1 {
                    assert_eq!(branch, Some(ClassBranch::PositiveRoot));
                }
                if k > 1 {
                    seen_pos |= branch == Some(ClassBranch::PositiveRoot);
                    seen_delta |= branch == Some(ClassBranch::DeltaMinusPositive);
                }
            }
        }
        assert!(seen_pos && seen_delta);
    }
}
