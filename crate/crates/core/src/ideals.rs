//! Ad-nilpotent ideals as upward-closed sets of positive roots.

use std::fmt;

use num_integer::binomial;

use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::rootsys::RootSystem;

/// Pairwise incomparable positive roots, kept sorted by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Antichain(Vec<usize>);

impl Antichain {
    /// Validates the antichain condition, naming the first comparable pair.
    pub fn new(rs: &RootSystem, mut roots: Vec<usize>) -> Result<Self> {
        roots.sort_unstable();
        roots.dedup();
        for &r in &roots {
            if r >= rs.num_positive_roots() {
                return Err(Error::RootOutOfRange(r));
            }
        }
        for (k, &a) in roots.iter().enumerate() {
            for &b in &roots[k + 1..] {
                if rs.precedes(a, b) || rs.precedes(b, a) {
                    return Err(Error::NotAntichain(a, b));
                }
            }
        }
        Ok(Antichain(roots))
    }

    pub(crate) fn from_sorted_unchecked(roots: Vec<usize>) -> Self {
        Antichain(roots)
    }

    pub fn empty() -> Self {
        Antichain(Vec::new())
    }

    pub fn roots(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.0.binary_search(&root).is_ok()
    }

    pub fn to_set(&self) -> RootSet {
        self.0.iter().copied().collect()
    }

    pub fn coords(&self, rs: &RootSystem) -> Vec<Vec<i32>> {
        self.0.iter().map(|&i| rs.root(i).to_vec()).collect()
    }
}

/// An upward-closed subset of the positive roots.
#[derive(Clone, Copy)]
pub struct Ideal<'a> {
    rs: &'a RootSystem,
    members: RootSet,
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.rs, other.rs) && self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("system", &self.rs.label())
            .field("members", &self.members)
            .finish()
    }
}

impl<'a> Ideal<'a> {
    /// Checks the closure condition before wrapping the set.
    pub fn new(rs: &'a RootSystem, members: RootSet) -> Result<Self> {
        let n = rs.num_positive_roots();
        for g in members.iter() {
            if g >= n {
                return Err(Error::RootOutOfRange(g));
            }
            for nu in 0..n {
                if let Some(s) = rs.root_sum(g, nu) {
                    if !members.contains(s) {
                        return Err(Error::NotAnIdeal(g, nu, s));
                    }
                }
            }
        }
        Ok(Ideal { rs, members })
    }

    pub(crate) fn from_closed(rs: &'a RootSystem, members: RootSet) -> Self {
        Ideal { rs, members }
    }

    pub fn empty(rs: &'a RootSystem) -> Self {
        Ideal {
            rs,
            members: RootSet::new(),
        }
    }

    /// The whole of the positive roots, generated by the simple roots.
    pub fn full(rs: &'a RootSystem) -> Self {
        Ideal {
            rs,
            members: rs.all_roots(),
        }
    }

    /// Roots of height at least `k`.
    pub fn of_height_at_least(rs: &'a RootSystem, k: u32) -> Self {
        let members = (0..rs.num_positive_roots())
            .filter(|&i| rs.height(i) >= k)
            .collect();
        Ideal { rs, members }
    }

    /// Roots with positive inner product against the highest root.
    pub fn heisenberg(rs: &'a RootSystem) -> Self {
        let theta = rs.root(rs.highest_root()).to_vec();
        let members = (0..rs.num_positive_roots())
            .filter(|&i| rs.inner_int(rs.root(i), &theta) > q(0))
            .collect();
        Ideal { rs, members }
    }

    pub fn system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn members(&self) -> RootSet {
        self.members
    }

    pub fn contains(&self, root: usize) -> bool {
        self.members.contains(root)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of simple roots in the ideal.
    pub fn sim(&self) -> usize {
        (self.members & self.rs.simple_set()).len()
    }

    /// Minimal elements of the ideal.
    pub fn generators(&self) -> Antichain {
        let gens = self
            .members
            .iter()
            .filter(|&g| {
                let mut strictly_below = *self.rs.down_set(g);
                strictly_below.remove(g);
                (strictly_below & self.members).is_empty()
            })
            .collect();
        Antichain(gens)
    }

    pub fn gen(&self) -> usize {
        self.generators().len()
    }

    /// `I_1 = I`, `I_k = (I_{k-1} + I) ∩ Δ+`, ending before the first empty term.
    pub fn lower_central_series(&self) -> Vec<Ideal<'a>> {
        let mut series = Vec::new();
        let mut current = self.members;
        while !current.is_empty() {
            series.push(Ideal::from_closed(self.rs, current));
            let mut next = RootSet::new();
            for g in current.iter() {
                for nu in self.members.iter() {
                    if let Some(s) = self.rs.root_sum(g, nu) {
                        next.insert(s);
                    }
                }
            }
            current = next;
        }
        series
    }

    pub fn class_of_nilpotence(&self) -> usize {
        self.lower_central_series().len()
    }

    /// Saturated chain from `self` up to `target`, one root per step.
    ///
    /// Each step inserts the lowest-index root of `target` whose strict up-set
    /// is already present.
    pub fn chain_to(&self, target: &Ideal<'a>) -> Result<Vec<Ideal<'a>>> {
        if !self.members.is_subset(&target.members) {
            return Err(Error::NotContained);
        }
        let mut chain = vec![*self];
        let mut current = self.members;
        while current != target.members {
            let next = target
                .members
                .difference(&current)
                .iter()
                .find(|&k| {
                    let mut above = *self.rs.up_set(k);
                    above.remove(k);
                    above.is_subset(&current)
                })
                .expect("a maximal element of the difference always exists");
            current.insert(next);
            chain.push(Ideal::from_closed(self.rs, current));
        }
        Ok(chain)
    }
}

/// Smallest ideal containing the antichain.
pub fn up_closure<'a>(rs: &'a RootSystem, gamma: &Antichain) -> Ideal<'a> {
    let mut members = RootSet::new();
    for &g in gamma.roots() {
        members |= *rs.up_set(g);
    }
    Ideal::from_closed(rs, members)
}

/// Positive roots supported on a subset of simple roots, with the induced order.
#[derive(Clone, Debug)]
pub struct SubPoset<'a> {
    rs: &'a RootSystem,
    simple: Vec<usize>,
    mask: RootSet,
}

pub fn sub_poset<'a>(rs: &'a RootSystem, simple: &[usize]) -> SubPoset<'a> {
    let mut keep = vec![false; rs.rank()];
    for &j in simple {
        keep[j] = true;
    }
    let mask = (0..rs.num_positive_roots())
        .filter(|&r| rs.supported_on(r, &keep))
        .collect();
    let mut simple = simple.to_vec();
    simple.sort_unstable();
    simple.dedup();
    SubPoset { rs, simple, mask }
}

impl<'a> SubPoset<'a> {
    pub fn elements(&self) -> RootSet {
        self.mask
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    /// Visits every antichain of the sub-poset, in depth-first order.
    pub fn for_each_antichain(&self, mut f: impl FnMut(&[usize])) {
        let mut chosen = Vec::new();
        walk_antichains(self.rs, self.mask, 0, RootSet::new(), &mut chosen, &mut f);
    }

    pub fn count_ideals(&self) -> u64 {
        let mut n = 0;
        self.for_each_antichain(|_| n += 1);
        n
    }

    /// Distribution of the number of simple roots over the ideals.
    pub fn sim_distribution(&self) -> Vec<u64> {
        let mut dist = vec![0; self.simple.len() + 1];
        // Simple roots are minimal, so an ideal contains one iff its antichain does.
        self.for_each_antichain(|a| dist[a.iter().filter(|&&r| r < self.rs.rank()).count()] += 1);
        dist
    }

    /// Connected components of the Dynkin diagram restricted to the subset.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rs.rank()];
        let mut out = Vec::new();
        for &s in &self.simple {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let a = comp[k];
                for &b in &self.simple {
                    if !seen[b] && self.rs.gram()[a][b] != q(0) {
                        seen[b] = true;
                        comp.push(b);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

fn walk_antichains(
    rs: &RootSystem,
    mask: RootSet,
    start: usize,
    forbidden: RootSet,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    f(chosen);
    for j in start..rs.num_positive_roots() {
        if !mask.contains(j) || forbidden.contains(j) {
            continue;
        }
        chosen.push(j);
        let blocked = forbidden | *rs.up_set(j) | *rs.down_set(j);
        walk_antichains(rs, mask, j + 1, blocked, chosen, f);
        chosen.pop();
    }
}

/// Visits every antichain of the full root poset.
pub fn for_each_antichain(rs: &RootSystem, f: impl FnMut(&[usize])) {
    sub_poset(rs, &(0..rs.rank()).collect::<Vec<_>>()).for_each_antichain(f);
}

/// All ideals, each once, sorted lexicographically by membership bitset.
pub fn enumerate_ideals(rs: &RootSystem) -> Vec<Ideal<'_>> {
    let mut sets = Vec::new();
    for_each_antichain(rs, |a| {
        let mut m = RootSet::new();
        for &g in a {
            m |= *rs.up_set(g);
        }
        sets.push(m);
    });
    sets.sort_unstable();
    sets.into_iter().map(|m| Ideal::from_closed(rs, m)).collect()
}

/// Coefficients of the simple-root generating polynomial `S_g(q)`.
pub fn sim_polynomial(rs: &RootSystem) -> Vec<u64> {
    sub_poset(rs, &(0..rs.rank()).collect::<Vec<_>>()).sim_distribution()
}

/// Coefficients of the generator-count polynomial `N_g(q)`.
pub fn narayana_polynomial(rs: &RootSystem) -> Vec<u64> {
    let mut d = vec![0; rs.rank() + 1];
    for_each_antichain(rs, |a| d[a.len()] += 1);
    d
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedFormCounts {
    pub total: u64,
    pub no_simple: u64,
}

fn exact_product(rs: &RootSystem, shift: i64) -> Result<u64> {
    let h = rs.coxeter_number() as i64;
    let prod: Q = rs
        .exponents()
        .iter()
        .map(|&e| Q::new(h + e as i64 + shift, e as i64 + 1))
        .product();
    if !prod.is_integer() {
        return Err(Error::InexactDivision(format!("{} gives {prod}", rs.label())));
    }
    Ok(prod.to_integer() as u64)
}

/// `prod (h+e_i+1)/(e_i+1)` and `prod (h+e_i-1)/(e_i+1)`.
pub fn closed_form_counts(rs: &RootSystem) -> Result<ClosedFormCounts> {
    Ok(ClosedFormCounts {
        total: exact_product(rs, 1)?,
        no_simple: exact_product(rs, -1)?,
    })
}

/// Outcome of checking the inclusion-exclusion recurrences for `#AD(g)_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub enumerated: Vec<u64>,
    pub via_alternating_sum: i64,
    pub via_subsystems: Vec<u64>,
    pub multiplicative: bool,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.multiplicative
            && self.via_alternating_sum == self.enumerated[0] as i64
            && self.via_subsystems == self.enumerated
    }
}

/// Recomputes `#AD(g)_i` from ideal counts of the Levi-type sub-posets.
pub fn recurrence_check(rs: &RootSystem) -> RecurrenceReport {
    let p = rs.rank();
    let enumerated = sim_polynomial(rs);
    let mut via_alternating_sum = 0i64;
    let mut via_subsystems = vec![0u64; p + 1];
    let mut multiplicative = true;
    for bits in 0u32..(1 << p) {
        let subset: Vec<usize> = (0..p).filter(|&j| bits >> j & 1 == 1).collect();
        let sp = sub_poset(rs, &subset);
        let total = sp.count_ideals();
        let zero = sp.sim_distribution()[0];
        let sign = if (p - subset.len()).is_multiple_of(2) { 1 } else { -1 };
        via_alternating_sum += sign * total as i64;
        via_subsystems[p - subset.len()] += zero;

        let product: u64 = sp
            .components()
            .iter()
            .map(|c| sub_poset(rs, c).count_ideals())
            .product();
        multiplicative &= product == total;
    }
    RecurrenceReport {
        enumerated,
        via_alternating_sum,
        via_subsystems,
        multiplicative,
    }
}

/// Per-ideal statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealStats {
    pub size: usize,
    pub sim: usize,
    pub gen: usize,
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct StatTable {
    pub records: Vec<IdealStats>,
    pub sim_poly: Vec<u64>,
    pub narayana_poly: Vec<u64>,
}

impl StatTable {
    pub fn build(rs: &RootSystem) -> Self {
        let mut records = Vec::new();
        let mut sim_poly = vec![0; rs.rank() + 1];
        let mut narayana_poly = vec![0; rs.rank() + 1];
        for ideal in enumerate_ideals(rs) {
            let s = IdealStats {
                size: ideal.len(),
                sim: ideal.sim(),
                gen: ideal.gen(),
                class: ideal.class_of_nilpotence(),
            };
            sim_poly[s.sim] += 1;
            narayana_poly[s.gen] += 1;
            records.push(s);
        }
        StatTable {
            records,
            sim_poly,
            narayana_poly,
        }
    }
}

/// `C(n, k)` with the convention that out-of-range arguments give 0.
pub fn choose(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n, k)
    }
}

pub fn catalan(m: i64) -> i64 {
    choose(2 * m, m) / (m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{all_systems, CartanType};

    fn rs(t: CartanType, p: usize) -> RootSystem {
        RootSystem::new(t, p).unwrap()
    }

    /// Independent oracle: count up-closed subsets by brute force over all subsets.
    fn brute_force_ideal_count(rs: &RootSystem) -> u64 {
        let n = rs.num_positive_roots();
        assert!(n <= 20);
        let mut count = 0;
        for bits in 0u32..(1 << n) {
            let closed = (0..n).all(|g| {
                bits >> g & 1 == 0
                    || (0..n).all(|nu| rs.root_sum(g, nu).is_none_or(|s| bits >> s & 1 == 1))
            });
            if closed {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn up_closure_examples() {
        let a2 = rs(CartanType::A, 2);
        let theta = Antichain::new(&a2, vec![2]).unwrap();
        assert_eq!(up_closure(&a2, &theta).len(), 1);
        let a1 = Antichain::new(&a2, vec![0]).unwrap();
        let i = up_closure(&a2, &a1);
        assert_eq!(i.members().iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn comparable_roots_are_rejected() {
        let a2 = rs(CartanType::A, 2);
        assert_eq!(Antichain::new(&a2, vec![0, 2]), Err(Error::NotAntichain(0, 2)));
        assert!(Antichain::new(&a2, vec![7]).is_err());
    }

    #[test]
    fn non_closed_sets_are_rejected() {
        let a2 = rs(CartanType::A, 2);
        let s: RootSet = [0].into_iter().collect();
        assert!(matches!(Ideal::new(&a2, s), Err(Error::NotAnIdeal(0, 1, 2))));
    }

    #[test]
    fn generators_of_extremes() {
        for (t, p) in all_systems(6) {
            let s = rs(t, p);
            assert_eq!(Ideal::full(&s).generators().roots(), (0..p).collect::<Vec<_>>());
            assert!(Ideal::empty(&s).generators().is_empty());
        }
    }

    #[test]
    fn sp8_example_generators() {
        let c4 = rs(CartanType::C, 4);
        let gens = Antichain::new(
            &c4,
            vec![
                c4.root_index(&[1, 0, 0, 0]).unwrap(),
                c4.root_index(&[0, 1, 1, 0]).unwrap(),
                c4.root_index(&[0, 0, 2, 1]).unwrap(),
            ],
        )
        .unwrap();
        let ideal = up_closure(&c4, &gens);
        assert_eq!(ideal.generators(), gens);
    }

    #[test]
    fn counts_match_brute_force_and_catalan() {
        let a2 = rs(CartanType::A, 2);
        assert_eq!(enumerate_ideals(&a2).len(), 5);
        for (t, p) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::C, 3), (CartanType::G, 2), (CartanType::A, 4)] {
            let s = rs(t, p);
            assert_eq!(enumerate_ideals(&s).len() as u64, brute_force_ideal_count(&s), "{t}{p}");
        }
        assert_eq!(enumerate_ideals(&rs(CartanType::C, 3)).len(), 20);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let s = rs(CartanType::B, 4);
        let ideals = enumerate_ideals(&s);
        assert!(ideals.windows(2).all(|w| w[0].members() < w[1].members()));
        assert!(ideals[0].is_empty());
    }

    #[test]
    fn sim_and_gen_examples() {
        let a2 = rs(CartanType::A, 2);
        let full = Ideal::full(&a2);
        assert_eq!((full.sim(), full.gen()), (2, 2));
        let theta: RootSet = [2].into_iter().collect();
        let i = Ideal::new(&a2, theta).unwrap();
        assert_eq!((i.sim(), i.gen()), (0, 1));
    }

    #[test]
    fn heisenberg_is_generated_by_its_simple_roots() {
        for (t, p) in all_systems(8) {
            if p < 2 {
                continue;
            }
            let s = rs(t, p);
            let h = Ideal::heisenberg(&s);
            let simple_part: Vec<usize> = (0..p).filter(|&i| h.contains(i)).collect();
            assert_eq!(h.generators().roots(), &simple_part[..], "{t}{p}");
            assert_eq!(h.class_of_nilpotence(), 2);
        }
    }

    #[test]
    fn lower_central_series_of_a2() {
        let a2 = rs(CartanType::A, 2);
        let series = Ideal::full(&a2).lower_central_series();
        let sets: Vec<Vec<usize>> = series.iter().map(|i| i.members().iter().collect()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![2]]);
        assert_eq!(Ideal::empty(&a2).class_of_nilpotence(), 0);
        let theta = Ideal::new(&a2, [2].into_iter().collect()).unwrap();
        assert_eq!(theta.class_of_nilpotence(), 1);
    }

    #[test]
    fn full_ideal_class_is_h_minus_one() {
        for (t, p) in all_systems(8) {
            let s = rs(t, p);
            let series = Ideal::full(&s).lower_central_series();
            assert_eq!(series.len() as u32, s.coxeter_number() - 1);
            for (k, term) in series.iter().enumerate() {
                assert_eq!(term.members(), Ideal::of_height_at_least(&s, k as u32 + 1).members());
            }
        }
    }

    #[test]
    fn chains_between_ideals() {
        let a2 = rs(CartanType::A, 2);
        let full = Ideal::full(&a2);
        assert_eq!(full.chain_to(&full).unwrap().len(), 1);
        assert_eq!(Ideal::empty(&a2).chain_to(&full).unwrap().len(), 4);
        let theta = Ideal::new(&a2, [2].into_iter().collect()).unwrap();
        let chain = theta.chain_to(&full).unwrap();
        let sets: Vec<Vec<usize>> = chain.iter().map(|i| i.members().iter().collect()).collect();
        assert_eq!(sets, vec![vec![2], vec![0, 2], vec![0, 1, 2]]);
        assert_eq!(full.chain_to(&theta), Err(Error::NotContained));
    }

    #[test]
    fn chain_steps_are_ideals_everywhere_in_c3() {
        let c3 = rs(CartanType::C, 3);
        let ideals = enumerate_ideals(&c3);
        for a in &ideals {
            for b in &ideals {
                if let Ok(chain) = a.chain_to(b) {
                    assert_eq!(chain.len(), b.len() - a.len() + 1);
                    for step in chain {
                        assert!(Ideal::new(&c3, step.members()).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn sub_poset_extremes() {
        let e6 = rs(CartanType::E, 6);
        assert_eq!(sub_poset(&e6, &[]).count_ideals(), 1);
        assert_eq!(sub_poset(&e6, &[0, 1, 2, 3, 4, 5]).count_ideals(), 833);
        let comps = sub_poset(&e6, &[0, 1, 4, 5]).components();
        assert_eq!(comps, vec![vec![0], vec![1], vec![4, 5]]);
    }

    #[test]
    fn f4_polynomials() {
        let f4 = rs(CartanType::F, 4);
        assert_eq!(sim_polynomial(&f4), vec![66, 24, 10, 4, 1]);
        assert_eq!(narayana_polynomial(&f4), vec![1, 24, 55, 24, 1]);
        assert_eq!(narayana_polynomial(&rs(CartanType::A, 2)), vec![1, 3, 1]);
    }

    #[test]
    fn closed_forms() {
        let f4 = closed_form_counts(&rs(CartanType::F, 4)).unwrap();
        assert_eq!(f4, ClosedFormCounts { total: 105, no_simple: 66 });
        // G2: h = 6, e = {1, 5}: (8/2)(12/6) = 8 and (6/2)(10/6) = 5.
        let g2 = closed_form_counts(&rs(CartanType::G, 2)).unwrap();
        assert_eq!(g2, ClosedFormCounts { total: 8, no_simple: 5 });
        assert_eq!(enumerate_ideals(&rs(CartanType::G, 2)).len(), 8);
        assert_eq!(sim_polynomial(&rs(CartanType::G, 2))[0], 5);
    }

    #[test]
    fn recurrences_hold_on_small_systems() {
        for (t, p) in all_systems(5) {
            let r = recurrence_check(&rs(t, p));
            assert!(r.passed(), "{t}{p}: {r:?}");
            assert_eq!(r.enumerated[p], 1);
            assert_eq!(r.enumerated[p - 1], p as u64);
        }
    }

    #[test]
    fn second_from_top_simple_count() {
        for (t, p) in all_systems(7) {
            if p < 2 {
                continue;
            }
            let s = sim_polynomial(&rs(t, p));
            let want = if t.is_simply_laced() { (p - 1) * (p + 2) / 2 } else { p * (p + 1) / 2 };
            if t == CartanType::G {
                // G2 has p-2 = 0; the doubly-laced rule covers B, C, F only.
                continue;
            }
            assert_eq!(s[p - 2] as usize, want, "{t}{p}");
        }
    }

    #[test]
    fn stat_table_aggregates() {
        let c3 = rs(CartanType::C, 3);
        let t = StatTable::build(&c3);
        assert_eq!(t.records.len(), 20);
        assert_eq!(t.sim_poly.iter().sum::<u64>(), 20);
        assert_eq!(t.narayana_poly, vec![1, 9, 9, 1]);
    }

    #[test]
    fn height_filtration_generators() {
        for (t, p) in all_systems(8) {
            let s = rs(t, p);
            for k in 1..s.coxeter_number() {
                let i = Ideal::of_height_at_least(&s, k);
                assert!(Ideal::new(&s, i.members()).is_ok());
                assert_eq!(i.generators().roots(), &s.roots_of_height(k)[..]);
            }
        }
    }
}
