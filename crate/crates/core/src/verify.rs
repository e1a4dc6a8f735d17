//! Named end-to-end checks of the counting formulas, tables, and
//! correspondences, shared by the command line and the test suite.

use std::collections::{BTreeSet, HashSet};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{
    class_criterion, d_point, element_from_inversions, generator_criterion, is_admissible,
    lattice_points_in_simplex, negative_preimage_count, phi_set, simplex_contains,
    simplex_face_codim, simplex_vertices, AffineWeylElement, ClassBranch, LatticePoint,
};
use crate::arrange::{is_bounded_region, region_witness, sign_pattern, zaslavsky_counts};
use crate::duality::{
    conjecture_properties_check, self_dual_ideals_a, Duality, TypeACoords,
};
use crate::error::{Error, Result};
use crate::ideals::{
    catalan, choose, closed_form_counts, enumerate_ideals, narayana_polynomial,
    recurrence_check, sim_polynomial, Ideal,
};
use crate::record::parse_generators;
use crate::rootsys::{all_systems, CartanType, RootSystem};

use CartanType::{A, B, C, D, E, F, G};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    /// Ranks up to 4.
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub scope: Scope,
    /// Whether E8 enumeration and sampling run in the full scope.
    pub include_e8: bool,
    /// Ideals sampled from each of E7 and E8.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            scope: Scope::Full,
            include_e8: true,
            samples: 500,
            seed: 0x5eed,
        }
    }
}

impl VerifyConfig {
    pub fn quick() -> Self {
        VerifyConfig {
            scope: Scope::Quick,
            ..Self::default()
        }
    }

    fn cap(&self, full: usize) -> usize {
        match self.scope {
            Scope::Quick => full.min(4),
            Scope::Full => full,
        }
    }

    fn allows(&self, t: CartanType, p: usize) -> bool {
        match self.scope {
            Scope::Quick => p <= 4,
            Scope::Full => self.include_e8 || (t, p) != (E, 8),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
}

/// Claim names with a one-line description, in report order.
pub const CLAIMS: [(&str, &str); 12] = [
    ("total-counts", "ideal counts equal prod (h+e_i+1)/(e_i+1)"),
    ("sim-tables", "simple-root statistic of the exceptional types"),
    ("no-simple", "ideals without simple roots vs prod (h+e_i-1)/(e_i+1) and chi(1)/|W|"),
    ("sim-sl", "simple-root statistic in type A"),
    ("sim-sp", "simple-root statistic in types C and D"),
    ("narayana", "generator-count polynomials"),
    ("cellini-papi", "admissible elements and lattice points of the simplex"),
    ("generator-criterion", "generators and class of nilpotence from the affine element"),
    ("duality-a", "type A duality and its fixed points"),
    ("duality-bc", "types B and C duality"),
    ("region-witness", "points of the dominant Catalan regions"),
    ("q-minus-one", "generator-count polynomials at q = -1"),
];

#[derive(Default)]
struct Checker {
    checks: usize,
    notes: Vec<String>,
    failures: Vec<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: impl std::fmt::Display, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn merge(&mut self, other: Checker) {
        self.checks += other.checks;
        self.notes.extend(other.notes);
        self.failures.extend(other.failures);
    }

    fn finish(self, name: &'static str) -> ClaimReport {
        ClaimReport {
            name,
            passed: self.failures.is_empty(),
            checks: self.checks,
            notes: self.notes,
            failures: self.failures,
        }
    }
}

fn build(t: CartanType, p: usize) -> RootSystem {
    RootSystem::new(t, p).expect("valid system")
}

/// Runs each system on the rayon pool and merges the results in order.
fn per_system(systems: &[(CartanType, usize)], f: impl Fn(&RootSystem, &mut Checker) + Sync) -> Checker {
    let parts: Vec<Checker> = systems
        .par_iter()
        .map(|&(t, p)| {
            let rs = build(t, p);
            let mut c = Checker::default();
            f(&rs, &mut c);
            c
        })
        .collect();
    let mut out = Checker::default();
    for c in parts {
        out.merge(c);
    }
    out
}

/// The irreducible systems covered by the counting claims.
pub fn counting_systems() -> Vec<(CartanType, usize)> {
    let mut v = Vec::new();
    v.extend((1..=8).map(|p| (A, p)));
    v.extend((2..=6).map(|p| (B, p)));
    v.extend((2..=6).map(|p| (C, p)));
    v.extend((4..=7).map(|p| (D, p)));
    v.extend([(E, 6), (E, 7), (E, 8), (F, 4), (G, 2)]);
    v
}

fn scoped(cfg: &VerifyConfig, systems: Vec<(CartanType, usize)>) -> Vec<(CartanType, usize)> {
    systems.into_iter().filter(|&(t, p)| cfg.allows(t, p)).collect()
}

fn total_counts(cfg: &VerifyConfig) -> Checker {
    let systems = scoped(cfg, counting_systems());
    per_system(&systems, |rs, c| {
        let n = enumerate_ideals(rs).len() as u64;
        let closed = closed_form_counts(rs).map(|x| x.total);
        c.eq(format!("{} ideal count", rs.label()), Ok(n), closed);
        if rs.label() == "E8" {
            c.eq("E8 ideal count", n, 25080);
        }
        c.note(format!("{}: {n}", rs.label()));
    })
}

const SIM_ROWS: [(CartanType, usize, &[u64]); 4] = [
    (F, 4, &[66, 24, 10, 4, 1]),
    (E, 6, &[418, 228, 110, 50, 20, 6, 1]),
    (E, 7, &[2431, 1001, 429, 187, 77, 27, 7, 1]),
    (E, 8, &[17342, 4784, 1771, 728, 299, 112, 35, 8, 1]),
];

fn sim_tables(cfg: &VerifyConfig) -> Checker {
    let rows: Vec<(CartanType, usize)> = SIM_ROWS
        .iter()
        .map(|r| (r.0, r.1))
        .filter(|&(t, p)| cfg.allows(t, p))
        .collect();
    let mut out = per_system(&rows, |rs, c| {
        let want = SIM_ROWS.iter().find(|r| r.0 == rs.cartan_type()
            && r.1 == rs.rank()).unwrap().2;
        let got = sim_polynomial(rs);
        c.eq(format!("{} simple-root statistic", rs.label()), got.as_slice(), want);
        c.note(format!("{}: {got:?}", rs.label()));
    });
    // Inclusion-exclusion over Levi subsystems and the top three coefficients.
    let recurrences = scoped(cfg, vec![(F, 4), (E, 6), (G, 2), (B, 4), (D, 5)]);
    out.merge(per_system(&recurrences, |rs, c| {
        let r = recurrence_check(rs);
        c.check(r.passed(), || format!("{} recurrences: {r:?}", rs.label()));
    }));
    out.merge(per_system(&scoped(cfg, counting_systems()), |rs, c| {
        let p = rs.rank();
        let s = sim_polynomial(rs);
        c.eq(format!("{} top coefficient", rs.label()), s[p], 1);
        c.eq(format!("{} coefficient p-1", rs.label()), s[p - 1], p as u64);
        if p >= 2 && rs.cartan_type() != G {
            let want = if rs.cartan_type().is_simply_laced() {
                (p - 1) * (p + 2) / 2
            } else {
                p * (p + 1) / 2
            };
            c.eq(format!("{} coefficient p-2", rs.label()), s[p - 2] as usize, want);
        }
    }));
    out
}

fn no_simple(cfg: &VerifyConfig) -> Checker {
    per_system(&scoped(cfg, counting_systems()), |rs, c| {
        let n = enumerate_ideals(rs).iter().filter(|i| i.sim() == 0).count() as u64;
        let closed = closed_form_counts(rs).map(|x| x.no_simple);
        let zas = zaslavsky_counts(rs).map(|x| x.dominant_bounded);
        c.eq(format!("{} product formula", rs.label()), Ok(n), closed);
        c.eq(format!("{} Zaslavsky count", rs.label()), Ok(n), zas);
        c.note(format!("{}: {n}", rs.label()));
    })
}

fn sim_sl(cfg: &VerifyConfig) -> Checker {
    let systems: Vec<_> = (1..=cfg.cap(7)).map(|p| (A, p)).collect();
    per_system(&systems, |rs, c| {
        let p = rs.rank() as i64;
        let got = sim_polynomial(rs);
        for (i, &n) in got.iter().enumerate() {
            let i = i as i64;
            let numer = (i + 1) * choose(2 * p - i, p);
            c.check(numer % (p + 1) == 0 && numer / (p + 1) == n as i64, || {
                format!("A{p}: #AD_{i} = {n}, formula gives {numer}/{}", p + 1)
            });
        }
    })
}

fn sim_sp(cfg: &VerifyConfig) -> Checker {
    let mut systems: Vec<_> = (2..=cfg.cap(6)).map(|p| (C, p)).collect();
    systems.extend((3..=cfg.cap(7)).map(|p| (D, p)));
    per_system(&systems, |rs, c| {
        let p = rs.rank() as i64;
        let got = sim_polynomial(rs);
        for (i, &n) in got.iter().enumerate() {
            let i = i as i64;
            let want = match rs.cartan_type() {
                C => choose(2 * p - 1 - i, p - 1),
                _ if i == 0 => choose(2 * p - 2, p - 2) + choose(2 * p - 3, p - 3),
                _ => choose(2 * p - 2 - i, p - 2) + choose(2 * p - 3 - i, p - 2),
            };
            c.check(n as i64 == want, || {
                format!("counterexample {}: #AD_{i} = {n}, conjectured {want}", rs.label())
            });
        }
        c.note(format!("{}: {got:?}", rs.label()));
    })
}

const NARAYANA_ROWS: [(CartanType, usize, &[u64]); 5] = [
    (G, 2, &[1, 6, 1]),
    (F, 4, &[1, 24, 55, 24, 1]),
    (E, 6, &[1, 36, 204, 351, 204, 36, 1]),
    (E, 7, &[1, 63, 546, 1470, 1470, 546, 63, 1]),
    (E, 8, &[1, 120, 1540, 6120, 9518, 6120, 1540, 120, 1]),
];

fn narayana_expected(t: CartanType, p: usize) -> Option<Vec<i64>> {
    let pi = p as i64;
    match t {
        A => {
            let n = pi + 1;
            Some((0..=pi).map(|k| choose(n, k) * choose(n, k + 1) / n).collect())
        }
        B | C => Some((0..=pi).map(|k| choose(pi, k).pow(2)).collect()),
        D if p >= 3 => Some(
            (0..=pi)
                .map(|k| choose(pi, k).pow(2) - pi * choose(pi - 1, k) * choose(pi - 1, k - 1) / (pi - 1))
                .collect(),
        ),
        _ => NARAYANA_ROWS
            .iter()
            .find(|r| r.0 == t && r.1 == p)
            .map(|r| r.2.iter().map(|&x| x as i64).collect()),
    }
}

fn narayana(cfg: &VerifyConfig) -> Checker {
    let mut systems: Vec<_> = NARAYANA_ROWS.iter().map(|r| (r.0, r.1)).collect();
    systems.extend((1..=8).map(|p| (A, p)));
    systems.extend((2..=6).flat_map(|p| [(B, p), (C, p)]));
    systems.extend((3..=7).map(|p| (D, p)));
    let mut out = per_system(&scoped(cfg, systems), |rs, c| {
        let got: Vec<i64> = narayana_polynomial(rs).iter().map(|&x| x as i64).collect();
        let want = narayana_expected(rs.cartan_type(), rs.rank()).unwrap();
        c.eq(format!("{} generator-count polynomial", rs.label()), &got, &want);
    });
    out.merge(per_system(&scoped(cfg, all_systems(8)), |rs, c| {
        let d = narayana_polynomial(rs);
        let rev: Vec<u64> = d.iter().rev().copied().collect();
        c.check(d == rev, || format!("{} not palindromic: {d:?}", rs.label()));
    }));
    out
}

/// Checks one ideal's element and point; returns the point.
fn check_element(rs: &RootSystem, ideal: &Ideal<'_>, c: &mut Checker) -> Option<LatticePoint> {
    let label = rs.label();
    let phi = phi_set(ideal);
    let w = match element_from_inversions(rs, &phi) {
        Ok(w) => w,
        Err(e) => {
            c.check(false, || format!("{label} {:?}: {e}", ideal.generators()));
            return None;
        }
    };
    c.check(w.inversion_set() == phi, || format!("{label}: inversion set round trip"));
    c.check(is_admissible(&w), || format!("{label}: element not admissible"));
    let series_len: usize = ideal.lower_central_series().iter().map(Ideal::len).sum();
    c.eq(format!("{label} length"), w.length(), series_len);
    c.check(w.ideal() == *ideal, || format!("{label}: ideal of element differs"));
    let d = d_point(&w).ok()?;
    c.check(d.in_coroot_lattice(rs) && simplex_contains(rs, &d), || {
        format!("{label}: d = {:?} outside the simplex lattice points", d.coords)
    });
    c.eq(format!("{label} face codimension"), simplex_face_codim(rs, &d), ideal.gen());
    Some(d)
}

fn cellini_papi(cfg: &VerifyConfig) -> Checker {
    let exhaustive = scoped(cfg, all_systems(cfg.cap(6)));
    let mut out = per_system(&exhaustive, |rs, c| {
        let ideals = enumerate_ideals(rs);
        let points: Vec<Option<LatticePoint>> = ideals.iter().map(|i| check_element(rs, i, c)).collect();
        let distinct: BTreeSet<LatticePoint> = points.iter().flatten().cloned().collect();
        c.eq(format!("{} distinct points", rs.label()), distinct.len(), ideals.len());
        let lattice: BTreeSet<LatticePoint> = lattice_points_in_simplex(rs).into_iter().collect();
        c.check(distinct == lattice, || format!("{}: points differ from the lattice search", rs.label()));
        let integral: Vec<LatticePoint> = simplex_vertices(rs)
            .into_iter()
            .filter(|v| v.in_coroot_lattice(rs))
            .collect();
        let full = d_point(&crate::affine::element_of_ideal(&Ideal::full(rs))).ok();
        c.check(integral.len() == 1 && Some(&integral[0]) == full.as_ref(), || {
            format!("{}: integral vertices {integral:?}", rs.label())
        });
    });
    if cfg.scope == Scope::Full {
        let sampled = scoped(cfg, vec![(E, 7), (E, 8)]);
        let samples = cfg.samples;
        let seed = cfg.seed;
        out.merge(per_system(&sampled, |rs, c| {
            let ideals = enumerate_ideals(rs);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ rs.rank() as u64);
            let picked = sample(&mut rng, ideals.len(), samples.min(ideals.len()));
            let lattice: HashSet<LatticePoint> = lattice_points_in_simplex(rs).into_iter().collect();
            c.eq(format!("{} lattice point count", rs.label()), lattice.len(), ideals.len());
            let mut seen = HashSet::new();
            for k in picked.iter() {
                if let Some(d) = check_element(rs, &ideals[k], c) {
                    c.check(lattice.contains(&d), || format!("{}: d not a lattice point", rs.label()));
                    c.check(seen.insert(d), || format!("{}: repeated d", rs.label()));
                }
            }
            let integral = simplex_vertices(rs).into_iter().filter(|v| v.in_coroot_lattice(rs)).count();
            c.eq(format!("{} integral vertices", rs.label()), integral, 1);
            c.note(format!("{}: {} sampled ideals", rs.label(), picked.len()));
        }));
    }
    out
}

fn generator_criterion_claim(cfg: &VerifyConfig) -> Checker {
    let systems = scoped(cfg, all_systems(cfg.cap(5)));
    let branch_seen = std::sync::Mutex::new([false; 2]);
    let mut out = per_system(&systems, |rs, c| {
        for ideal in enumerate_ideals(rs) {
            let w = crate::affine::element_of_ideal(&ideal);
            let gens = ideal.generators();
            for g in ideal.members().iter() {
                c.eq(
                    format!("{} generator test for root {}", rs.label(), rs.format_root(g)),
                    generator_criterion(&w, g),
                    Ok(gens.contains(g)),
                );
            }
            c.eq(format!("{} negative preimages", rs.label()), negative_preimage_count(&w), ideal.gen());
            let (k, branch) = class_criterion(&w);
            c.eq(format!("{} class", rs.label()), k, ideal.class_of_nilpotence());
            if k > 1 {
                let mut seen = branch_seen.lock().unwrap();
                match branch {
                    Some(ClassBranch::PositiveRoot) => seen[0] = true,
                    Some(ClassBranch::DeltaMinusPositive) => seen[1] = true,
                    None => {}
                }
            }
        }
        if rs.rank() >= 2 {
            let h = Ideal::heisenberg(rs);
            let w = crate::affine::element_of_ideal(&h);
            let minus_theta: Vec<i64> = rs.root(rs.highest_root()).iter().map(|&x| -(x as i64)).collect();
            let t = AffineWeylElement::translation_by(rs, &minus_theta).ok();
            c.check(Some(&w) == t.as_ref(), || format!("{}: Heisenberg element is not t(-θ)", rs.label()));
            c.eq(format!("{} Heisenberg class", rs.label()), class_criterion(&w).0, 2);
            c.eq(format!("{} Heisenberg generators", rs.label()), h.generators().to_set(), h.members() & rs.simple_set());
        }
    });
    let seen = branch_seen.into_inner().unwrap();
    out.note(format!(
        "class > 1 branches realized: positive root {}, delta minus positive root {}",
        seen[0], seen[1]
    ));
    out
}

const SL7_SELF_DUAL: [&[(usize, usize)]; 5] = [
    &[(1, 5), (2, 6), (3, 7)],
    &[(1, 4), (2, 6), (4, 7)],
    &[(1, 4), (2, 5), (5, 7)],
    &[(1, 3), (3, 6), (4, 7)],
    &[(1, 3), (3, 5), (5, 7)],
];

fn duality_a(cfg: &VerifyConfig) -> Checker {
    let systems: Vec<_> = (1..=cfg.cap(8)).map(|p| (A, p)).collect();
    let mut out = per_system(&systems, |rs, c| {
        match Duality::new(rs).and_then(|d| conjecture_properties_check(&d)) {
            Ok(report) => {
                for f in report.failures() {
                    c.check(false, || format!("{}: {f}", rs.label()));
                }
                c.check(true, String::new);
            }
            Err(e) => c.check(false, || format!("{}: {e}", rs.label())),
        }
    });
    let max_n = match cfg.scope {
        Scope::Quick => 7,
        Scope::Full => 11,
    };
    let counts: Vec<(usize, usize)> = (2..=max_n)
        .into_par_iter()
        .map(|n| (n, self_dual_ideals_a(n).len()))
        .collect();
    for (n, got) in counts {
        let want = if n % 2 == 1 { catalan((n as i64 - 1) / 2) as usize } else { 0 };
        out.eq(format!("sl{n} self-dual count"), got, want);
    }
    let want: BTreeSet<TypeACoords> = SL7_SELF_DUAL
        .iter()
        .map(|g| TypeACoords::from_pairs(7, g.to_vec()).unwrap())
        .collect();
    let got: BTreeSet<TypeACoords> = self_dual_ideals_a(7).into_iter().collect();
    out.eq("sl7 self-dual generators", got, want);
    out
}

type TableRow = (&'static str, &'static str);

const SP6_TABLE: [TableRow; 9] = [
    ("100", "010,001"),
    ("010", "100,001"),
    ("001", "100,010"),
    ("110", "110,001"),
    ("011", "021,100"),
    ("021", "011,100"),
    ("111", "110,021"),
    ("121", "111,021"),
    ("221", "110,011"),
];

const SO7_TABLE: [TableRow; 9] = [
    ("100", "010,001"),
    ("010", "100,001"),
    ("001", "100,010"),
    ("110", "110,001"),
    ("011", "012,100"),
    ("012", "011,100"),
    ("111", "110,012"),
    ("112", "111,012"),
    ("122", "110,011"),
];

fn check_table(t: CartanType, rows: &[TableRow], c: &mut Checker) {
    let rs = build(t, 3);
    let d = Duality::new(&rs).expect("B3 and C3 have a duality");
    for (k, &(g, want)) in rows.iter().enumerate() {
        let (g, want) = (parse_generators(&rs, g).unwrap(), parse_generators(&rs, want).unwrap());
        c.eq(format!("{}3 table row {}", t, k + 1), d.dual(&g), want.clone());
        c.eq(format!("{}3 table row {} reversed", t, k + 1), d.dual(&want), g);
    }
}

fn duality_bc(cfg: &VerifyConfig) -> Checker {
    let mut out = Checker::default();
    check_table(C, &SP6_TABLE, &mut out);
    check_table(B, &SO7_TABLE, &mut out);
    let systems: Vec<_> = (2..=cfg.cap(6)).flat_map(|p| [(B, p), (C, p)]).collect();
    out.merge(per_system(&systems, |rs, c| {
        match Duality::new(rs).and_then(|d| conjecture_properties_check(&d)) {
            Ok(report) => {
                for f in report.failures() {
                    c.check(false, || format!("{}: {f}", rs.label()));
                }
                c.eq(format!("{} self-dual ideals", rs.label()), report.self_dual, 0);
            }
            Err(e) => c.check(false, || format!("{}: {e}", rs.label())),
        }
    }));
    let g2 = build(G, 2);
    match Duality::new(&g2).and_then(|d| conjecture_properties_check(&d)) {
        Ok(report) => out.check(report.passed(), || format!("G2: {:?}", report.failures())),
        Err(e) => out.check(false, || format!("G2: {e}")),
    }
    out
}

fn region_witness_claim(cfg: &VerifyConfig) -> Checker {
    let systems = scoped(cfg, all_systems(4));
    per_system(&systems, |rs, c| {
        let mut patterns = HashSet::new();
        let mut bounded = 0u64;
        let ideals = enumerate_ideals(rs);
        for ideal in &ideals {
            match region_witness(ideal) {
                Ok(x) => {
                    let pattern = sign_pattern(rs, &x);
                    c.check(pattern == Some(ideal.members()), || {
                        format!("{}: witness pattern differs", rs.label())
                    });
                    patterns.insert(pattern);
                }
                Err(e) => c.check(false, || format!("{}: {e}", rs.label())),
            }
            c.eq(format!("{} boundedness", rs.label()), is_bounded_region(ideal), ideal.sim() == 0);
            bounded += u64::from(is_bounded_region(ideal));
        }
        c.eq(format!("{} distinct regions", rs.label()), patterns.len(), ideals.len());
        c.eq(
            format!("{} bounded regions", rs.label()),
            Ok(bounded),
            zaslavsky_counts(rs).map(|z| z.dominant_bounded),
        );
    })
}

fn at_minus_one(poly: &[u64]) -> i64 {
    poly.iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

fn q_minus_one(cfg: &VerifyConfig) -> Checker {
    let quick = cfg.scope == Scope::Quick;
    let mut systems: Vec<_> = (1..=if quick { 4 } else { 10 }).map(|p| (A, p)).collect();
    systems.extend((2..=cfg.cap(8)).flat_map(|p| [(B, p), (C, p)]));
    systems.extend((3..=cfg.cap(7)).map(|p| (D, p)));
    per_system(&systems, |rs, c| {
        let p = rs.rank() as i64;
        let got = at_minus_one(&narayana_polynomial(rs));
        let half_sign = |m: i64| if m % 2 == 0 { 1 } else { -1 };
        let want = match rs.cartan_type() {
            A => {
                let n = p + 1;
                if n % 2 == 0 {
                    0
                } else {
                    half_sign((n - 1) / 2) * catalan((n - 1) / 2)
                }
            }
            B | C if p % 2 == 1 => 0,
            B | C => half_sign(p / 2) * choose(p, p / 2),
            _ if p % 2 == 1 => 0,
            _ => half_sign(p / 2) * 2 * choose(p - 2, p / 2),
        };
        c.eq(format!("{} N(-1)", rs.label()), got, want);
        if rs.cartan_type() == A && p <= 8 {
            let fixed = self_dual_ideals_a(p as usize + 1).len() as i64;
            c.eq(format!("{} |N(-1)| vs fixed points", rs.label()), got.abs(), fixed);
        }
        c.note(format!("{}: {got}", rs.label()));
    })
}

/// Runs one named claim.
pub fn run_claim(name: &str, cfg: &VerifyConfig) -> Result<ClaimReport> {
    let (name, _) = CLAIMS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Parse {
            what: "claim",
            input: name.to_string(),
        })?;
    let checker = match *name {
        "total-counts" => total_counts(cfg),
        "sim-tables" => sim_tables(cfg),
        "no-simple" => no_simple(cfg),
        "sim-sl" => sim_sl(cfg),
        "sim-sp" => sim_sp(cfg),
        "narayana" => narayana(cfg),
        "cellini-papi" => cellini_papi(cfg),
        "generator-criterion" => generator_criterion_claim(cfg),
        "duality-a" => duality_a(cfg),
        "duality-bc" => duality_bc(cfg),
        "region-witness" => region_witness_claim(cfg),
        _ => q_minus_one(cfg),
    };
    Ok(checker.finish(name))
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<ClaimReport> {
    CLAIMS
        .iter()
        .map(|(n, _)| run_claim(n, cfg).expect("known claim"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_scope_passes() {
        for r in run_all(&VerifyConfig::quick()) {
            assert!(r.passed, "{}: {:?}", r.name, r.failures);
            assert!(r.checks > 0, "{}", r.name);
        }
    }

    #[test]
    fn unknown_claim() {
        assert!(run_claim("nope", &VerifyConfig::quick()).is_err());
    }

    #[test]
    fn expected_narayana_rows_are_palindromic() {
        for (t, p) in counting_systems() {
            let v = narayana_expected(t, p).unwrap();
            let mut r = v.clone();
            r.reverse();
            assert_eq!(v, r, "{t}{p}");
        }
    }
}
