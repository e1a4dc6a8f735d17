//! Dominant regions of the Catalan arrangement `(x, μ) ∈ {-1, 0, 1}`.

use crate::affine::element_of_ideal;
use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::linalg::{q, Q};
use crate::rootsys::RootSystem;

/// `χ(t) = prod_i (t - h - e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    /// Roots `h + e_i` of the linear factors.
    pub roots: Vec<i64>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.roots.iter().map(|&r| (t - r) as i128).product()
    }

    /// Coefficients in increasing degree.
    pub fn expanded(&self) -> Vec<i128> {
        let mut c = vec![1i128];
        for &r in &self.roots {
            let mut next = vec![0i128; c.len() + 1];
            for (k, &a) in c.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r as i128;
            }
            c = next;
        }
        c
    }

    pub fn eval_expanded(&self, t: i64) -> i128 {
        self.expanded()
            .iter()
            .rev()
            .fold(0i128, |acc, &a| acc * t as i128 + a)
    }
}

pub fn char_poly(rs: &RootSystem) -> CharPoly {
    let h = rs.coxeter_number() as i64;
    CharPoly {
        roots: rs.exponents().iter().map(|&e| h + e as i64).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionCounts {
    pub regions: u128,
    pub bounded: u128,
    pub dominant_regions: u64,
    pub dominant_bounded: u64,
}

pub fn weyl_group_order(rs: &RootSystem) -> u128 {
    rs.exponents().iter().map(|&e| e as u128 + 1).product()
}

/// Region counts from `χ(-1)` and `χ(1)`, divided by `|W|` for the dominant chamber.
pub fn zaslavsky_counts(rs: &RootSystem) -> Result<RegionCounts> {
    let chi = char_poly(rs);
    let sign: i128 = if chi.degree().is_multiple_of(2) { 1 } else { -1 };
    let regions = (sign * chi.eval(-1)) as u128;
    let bounded = chi.eval(1).unsigned_abs();
    let order = weyl_group_order(rs);
    let exact = |n: u128, what: &str| {
        if n.is_multiple_of(order) {
            Ok((n / order) as u64)
        } else {
            Err(Error::InexactDivision(format!("{} {what}: {n} / {order}", rs.label())))
        }
    };
    Ok(RegionCounts {
        regions,
        bounded,
        dominant_regions: exact(regions, "regions")?,
        dominant_bounded: exact(bounded, "bounded regions")?,
    })
}

/// The region of an ideal is bounded exactly when the ideal has no simple root.
pub fn is_bounded_region(ideal: &Ideal<'_>) -> bool {
    ideal.sim() == 0
}

/// Roots `γ` with `(x, γ) > 1`, or `None` if `x` is off the dominant chamber's
/// interior or lies on some hyperplane `(x, γ) = 1`.
pub fn sign_pattern(rs: &RootSystem, x: &[Q]) -> Option<RootSet> {
    let mut above = RootSet::new();
    for (i, gamma) in rs.roots().iter().enumerate() {
        let g: Vec<Q> = gamma.iter().map(|&c| q(c as i64)).collect();
        let v = rs.inner(x, &g);
        if v <= q(0) || v == q(1) {
            return None;
        }
        if v > q(1) {
            above.insert(i);
        }
    }
    Some(above)
}

/// An exact point of the region attached to the ideal.
///
/// Takes the image of `ρ∨/h`, an interior point of the fundamental alcove,
/// under `w^{-1}` for the element of the ideal, and verifies it.
pub fn region_witness(ideal: &Ideal<'_>) -> Result<Vec<Q>> {
    let rs = ideal.system();
    let h = q(rs.coxeter_number() as i64);
    let x0: Vec<Q> = rs.rho_coweight().iter().map(|c| c / h).collect();
    let x = element_of_ideal(ideal).act_affine_inverse(&x0);
    match sign_pattern(rs, &x) {
        Some(p) if p == ideal.members() => Ok(x),
        _ => Err(Error::WitnessInfeasible(ideal.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{closed_form_counts, enumerate_ideals};
    use crate::rootsys::{all_systems, CartanType};

    #[test]
    fn f4_counts() {
        let f4 = RootSystem::new(CartanType::F, 4).unwrap();
        let c = zaslavsky_counts(&f4).unwrap();
        assert_eq!((c.dominant_regions, c.dominant_bounded), (105, 66));
        assert_eq!(weyl_group_order(&f4), 1152);
    }

    #[test]
    fn expanded_agrees_with_factored() {
        for (t, p) in all_systems(8) {
            let rs = RootSystem::new(t, p).unwrap();
            let chi = char_poly(&rs);
            assert_eq!(chi.degree(), p);
            for x in -2..=2 {
                assert_eq!(chi.eval(x), chi.eval_expanded(x));
            }
            let c = zaslavsky_counts(&rs).unwrap();
            let closed = closed_form_counts(&rs).unwrap();
            assert_eq!(c.dominant_regions, closed.total);
            assert_eq!(c.dominant_bounded, closed.no_simple);
        }
    }

    #[test]
    fn empty_ideal_witness_is_alcove_point() {
        let rs = RootSystem::new(CartanType::B, 3).unwrap();
        let x = region_witness(&Ideal::empty(&rs)).unwrap();
        let h = q(rs.coxeter_number() as i64);
        let want: Vec<Q> = rs.rho_coweight().iter().map(|c| c / h).collect();
        assert_eq!(x, want);
        assert!(is_bounded_region(&Ideal::empty(&rs)));
        assert!(!is_bounded_region(&Ideal::full(&rs)));
    }

    #[test]
    fn a2_theta_witness() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let ideal = Ideal::new(&rs, [2].into_iter().collect()).unwrap();
        let x = region_witness(&ideal).unwrap();
        let a1 = rs.inner(&x, &[q(1), q(0)]);
        let a2 = rs.inner(&x, &[q(0), q(1)]);
        assert!(a1 > q(0) && a1 < q(1) && a2 > q(0) && a2 < q(1) && a1 + a2 > q(1));
    }

    #[test]
    fn c3_witnesses_are_distinct() {
        let rs = RootSystem::new(CartanType::C, 3).unwrap();
        let mut patterns = std::collections::HashSet::new();
        for ideal in enumerate_ideals(&rs) {
            let x = region_witness(&ideal).unwrap();
            patterns.insert(sign_pattern(&rs, &x).unwrap());
        }
        assert_eq!(patterns.len(), 20);
    }

    #[test]
    fn off_chamber_points_have_no_pattern() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(sign_pattern(&rs, &[q(0), q(0)]), None);
        assert_eq!(sign_pattern(&rs, &[q(1), q(1)]), None);
    }
}
