//! The involution `Γ ↦ Γ*` on antichains of positive roots in types A, B, C
//! and G2.
//!
//! Type A works with matrix coordinates: the root `α_i + ... + α_{j-1}` of
//! `sl_n` is the box `(i, j)`, and an antichain is the pair of sequences of its
//! row and column indices. Types B and C use shifted diagrams, boxes
//! `(i, j)` with `1 <= i < j <= 2p + 1 - i`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{for_each_antichain, sub_poset, up_closure, Antichain, Ideal};
use crate::rootsys::{CartanType, RootSystem};

/// Generators of an `sl_n` ideal as row indices `x` and column indices `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeACoords {
    pub n: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl TypeACoords {
    pub fn from_pairs(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        let c = TypeACoords {
            n,
            x: pairs.iter().map(|p| p.0).collect(),
            y: pairs.iter().map(|p| p.1).collect(),
        };
        if c.is_valid() {
            Ok(c)
        } else {
            Err(Error::BadCoordinates(format!("sl{n}: {pairs:?}")))
        }
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.x.iter().copied().zip(self.y.iter().copied()).collect()
    }

    /// Strictly increasing, in range, and `x_l < y_l`.
    pub fn is_valid(&self) -> bool {
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        self.x.len() == self.y.len()
            && increasing(&self.x)
            && increasing(&self.y)
            && self.x.iter().all(|&i| 1 <= i && i < self.n)
            && self.y.iter().all(|&j| 2 <= j && j <= self.n)
            && self.x.iter().zip(&self.y).all(|(i, j)| i < j)
    }

    /// Symmetric about the antidiagonal of an `n × n` matrix.
    pub fn is_self_conjugate(&self) -> bool {
        let mirrored: Vec<usize> = self.y.iter().rev().map(|&j| self.n + 1 - j).collect();
        mirrored == self.x
    }
}

impl fmt::Display for TypeACoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `X* = ({2..n} \ Y) - 1` and `Y* = ({1..n-1} \ X) + 1`.
pub fn dual_a(c: &TypeACoords) -> TypeACoords {
    let y: BTreeSet<usize> = c.y.iter().copied().collect();
    let x: BTreeSet<usize> = c.x.iter().copied().collect();
    let out = TypeACoords {
        n: c.n,
        x: (2..=c.n).filter(|j| !y.contains(j)).map(|j| j - 1).collect(),
        y: (1..c.n).filter(|i| !x.contains(i)).map(|i| i + 1).collect(),
    };
    assert!(out.is_valid(), "dual of {c} is not a valid diagram");
    out
}

/// Box `(i, j)` of the root `α_i + ... + α_{j-1}`, 1-based.
pub fn root_to_box_a(coords: &[i32]) -> Option<(usize, usize)> {
    let first = coords.iter().position(|&c| c != 0)?;
    let len = coords[first..].iter().take_while(|&&c| c == 1).count();
    if coords[first + len..].iter().any(|&c| c != 0) {
        return None;
    }
    Some((first + 1, first + len + 1))
}

pub fn box_to_root_a(p: usize, (i, j): (usize, usize)) -> Vec<i32> {
    (1..=p).map(|k| i32::from(i <= k && k < j)).collect()
}

pub fn roots_to_coords_a(rs: &RootSystem, gamma: &Antichain) -> TypeACoords {
    let pairs = gamma
        .roots()
        .iter()
        .map(|&r| root_to_box_a(rs.root(r)).expect("type A root"))
        .collect();
    TypeACoords::from_pairs(rs.rank() + 1, pairs).expect("antichain gives valid coordinates")
}

pub fn coords_to_roots_a(rs: &RootSystem, c: &TypeACoords) -> Result<Antichain> {
    let roots = c
        .pairs()
        .into_iter()
        .map(|b| {
            rs.root_index(&box_to_root_a(rs.rank(), b))
                .ok_or_else(|| Error::BadCoordinates(format!("{b:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Antichain::new(rs, roots)
}

/// Shifted-diagram generators `(i_l, j_l)` for types B and C.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeCCoords {
    pub p: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl TypeCCoords {
    pub fn new(p: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        let c = TypeCCoords { p, pairs };
        if c.is_valid() {
            Ok(c)
        } else {
            Err(Error::BadCoordinates(format!("rank {p}: {:?}", c.pairs)))
        }
    }

    pub fn is_valid(&self) -> bool {
        let n = 2 * self.p + 1;
        self.pairs.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1)
            && self.pairs.iter().all(|&(i, j)| 1 <= i && i < j && i + j <= n)
    }

    /// The self-conjugate `sl_{2p}` diagram with the same generators.
    pub fn unfold(&self) -> TypeACoords {
        let n = 2 * self.p + 1;
        let mut x: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        let mut y: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        let on_diagonal = self.pairs.last().is_some_and(|&(i, j)| i + j == n);
        let skip = usize::from(on_diagonal);
        x.extend(self.pairs.iter().rev().skip(skip).map(|p| n - p.1));
        y.extend(self.pairs.iter().rev().skip(skip).map(|p| n - p.0));
        TypeACoords { n: 2 * self.p, x, y }
    }

    /// Inverse of [`TypeCCoords::unfold`] on self-conjugate diagrams.
    pub fn fold(c: &TypeACoords) -> Self {
        debug_assert!(c.is_self_conjugate());
        let n = c.n + 1;
        TypeCCoords {
            p: c.n / 2,
            pairs: c.pairs().into_iter().filter(|&(i, j)| i + j <= n).collect(),
        }
    }
}

/// Unfold, dualize in `sl_{2p}`, fold back.
pub fn dual_c(c: &TypeCCoords) -> TypeCCoords {
    let unfolded = c.unfold();
    debug_assert!(unfolded.is_valid() && unfolded.is_self_conjugate());
    let d = dual_a(&unfolded);
    assert!(d.is_self_conjugate(), "dual of {unfolded} is not self-conjugate");
    TypeCCoords::fold(&d)
}

/// Both B and C boxes have the same shape, so the B duality reuses `dual_c`.
pub fn dual_b(c: &TypeCCoords) -> TypeCCoords {
    dual_c(c)
}

fn interval(p: usize, from: usize, to: usize, mult: i32, out: &mut [i32]) {
    for k in from..=to.min(p) {
        out[k - 1] += mult;
    }
}

/// Root of `C_p` in box `(i, j)`.
pub fn box_to_root_c(p: usize, (i, j): (usize, usize)) -> Vec<i32> {
    let mut r = vec![0; p];
    if j <= p {
        interval(p, i, j - 1, 1, &mut r);
    } else {
        let k = 2 * p + 1 - j;
        interval(p, i, p - 1, 1, &mut r);
        interval(p, k, p - 1, 1, &mut r);
        r[p - 1] += 1;
    }
    r
}

/// Root of `B_p` in box `(i, j)`.
pub fn box_to_root_b(p: usize, (i, j): (usize, usize)) -> Vec<i32> {
    let mut r = vec![0; p];
    if j <= p {
        interval(p, i, j - 1, 1, &mut r);
    } else if j == p + 1 {
        interval(p, i, p, 1, &mut r);
    } else {
        let k = 2 * p + 2 - j;
        interval(p, i, k - 1, 1, &mut r);
        interval(p, k, p, 2, &mut r);
    }
    r
}

/// All boxes of the shifted staircase, row by row.
pub fn shifted_boxes(p: usize) -> Vec<(usize, usize)> {
    (1..=p)
        .flat_map(|i| (i + 1..=2 * p + 1 - i).map(move |j| (i, j)))
        .collect()
}

#[derive(Clone, Debug)]
enum Kind {
    A,
    Shifted {
        to_box: Vec<(usize, usize)>,
        from_box: HashMap<(usize, usize), usize>,
    },
    G2(Vec<usize>),
}

/// The duality on antichains of one irreducible system.
#[derive(Clone, Debug)]
pub struct Duality<'a> {
    rs: &'a RootSystem,
    kind: Kind,
}

/// Pairs `(Γ, Γ*)` for G2 as coordinate vectors; singletons only, the rest is
/// `∅ ↔ Π`.
pub const G2_TABLE: [([i32; 2], [i32; 2]); 3] = [([1, 0], [0, 1]), ([1, 1], [3, 2]), ([2, 1], [3, 1])];

impl<'a> Duality<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        let p = rs.rank();
        let kind = match rs.cartan_type() {
            CartanType::A => Kind::A,
            t @ (CartanType::B | CartanType::C) => {
                let mut to_box = vec![(0, 0); rs.num_positive_roots()];
                let mut from_box = HashMap::new();
                for b in shifted_boxes(p) {
                    let coords = if t == CartanType::B {
                        box_to_root_b(p, b)
                    } else {
                        box_to_root_c(p, b)
                    };
                    let r = rs.root_index(&coords).expect("every box is a root");
                    to_box[r] = b;
                    from_box.insert(b, r);
                }
                Kind::Shifted { to_box, from_box }
            }
            CartanType::G => {
                let mut partner = vec![0; 6];
                for (a, b) in G2_TABLE {
                    let (a, b) = (rs.root_index(&a).unwrap(), rs.root_index(&b).unwrap());
                    partner[a] = b;
                    partner[b] = a;
                }
                Kind::G2(partner)
            }
            t => return Err(Error::UnsupportedDuality(t)),
        };
        Ok(Duality { rs, kind })
    }

    pub fn system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn shifted_coords(&self, gamma: &Antichain) -> Option<TypeCCoords> {
        match &self.kind {
            Kind::Shifted { to_box, .. } => Some(
                TypeCCoords::new(self.rs.rank(), gamma.roots().iter().map(|&r| to_box[r]).collect())
                    .expect("antichain gives a valid shifted diagram"),
            ),
            _ => None,
        }
    }

    pub fn dual(&self, gamma: &Antichain) -> Antichain {
        let rs = self.rs;
        match &self.kind {
            Kind::A => coords_to_roots_a(rs, &dual_a(&roots_to_coords_a(rs, gamma)))
                .expect("dual coordinates are an antichain"),
            Kind::Shifted { from_box, .. } => {
                let c = self.shifted_coords(gamma).unwrap();
                let d = dual_c(&c);
                Antichain::new(rs, d.pairs.iter().map(|b| from_box[b]).collect())
                    .expect("dual boxes are an antichain")
            }
            Kind::G2(partner) => match gamma.len() {
                0 => Antichain::new(rs, vec![0, 1]).unwrap(),
                1 => Antichain::new(rs, vec![partner[gamma.roots()[0]]]).unwrap(),
                _ => Antichain::empty(),
            },
        }
    }

    pub fn dual_ideal(&self, ideal: &Ideal<'a>) -> Ideal<'a> {
        up_closure(self.rs, &self.dual(&ideal.generators()))
    }
}

/// Irreducible type of a connected set of simple roots of `rs`, with its
/// nodes in Bourbaki order.
fn component_type(rs: &RootSystem, nodes: &[usize]) -> Result<CartanType> {
    let p = rs.rank();
    Ok(match rs.cartan_type() {
        CartanType::A => CartanType::A,
        t @ (CartanType::B | CartanType::C) => {
            if nodes.len() >= 2 && nodes.contains(&(p - 1)) {
                t
            } else {
                CartanType::A
            }
        }
        CartanType::G if nodes.len() == 1 => CartanType::A,
        CartanType::G => CartanType::G,
        t => return Err(Error::UnsupportedDuality(t)),
    })
}

/// Duality on the Levi subsystem spanned by some simple roots, taken
/// componentwise. Subsystems are built on demand and cached.
pub struct SubsystemDuality<'a> {
    rs: &'a RootSystem,
    cache: HashMap<Vec<usize>, RootSystem>,
}

impl<'a> SubsystemDuality<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        SubsystemDuality {
            rs,
            cache: HashMap::new(),
        }
    }

    /// Dual of `gamma`, which must be supported on `simple`, inside the
    /// subsystem spanned by `simple`.
    pub fn dual(&mut self, simple: &[usize], gamma: &[usize]) -> Result<Vec<usize>> {
        let rs = self.rs;
        let mut out = Vec::new();
        for comp in sub_poset(rs, simple).components() {
            let t = component_type(rs, &comp)?;
            let sub = self
                .cache
                .entry(comp.clone())
                .or_insert_with(|| RootSystem::new(t, comp.len()).expect("valid component"));
            let restrict = |r: usize| -> Vec<i32> { comp.iter().map(|&k| rs.root(r)[k]).collect() };
            let local: Vec<usize> = gamma
                .iter()
                .filter(|&&r| comp.iter().any(|&k| rs.root(r)[k] != 0))
                .map(|&r| sub.root_index(&restrict(r)).expect("root of the component"))
                .collect();
            let duality = Duality::new(sub)?;
            let d = duality.dual(&Antichain::new(sub, local)?);
            for &r in d.roots() {
                let mut full = vec![0; rs.rank()];
                for (k, &c) in comp.iter().zip(sub.root(r)) {
                    full[*k] = c;
                }
                out.push(rs.root_index(&full).expect("embedded root"));
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// Violations of the conjectured duality properties, one message each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    pub antichains: usize,
    pub self_dual: usize,
    pub involution: Vec<String>,
    pub generator_count: Vec<String>,
    pub removal: Vec<String>,
    pub extension: Vec<String>,
    pub height: Vec<String>,
    pub lengths: Vec<String>,
    pub simple_subsets: Vec<String>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&String> {
        [
            &self.involution,
            &self.generator_count,
            &self.removal,
            &self.extension,
            &self.height,
            &self.lengths,
            &self.simple_subsets,
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

fn show(rs: &RootSystem, roots: &[usize]) -> String {
    let parts: Vec<String> = roots.iter().map(|&r| rs.format_root(r)).collect();
    format!("{{{}}}", parts.join(","))
}

/// Checks involution, generator-count complementarity, compatibility with
/// removing or adding a simple root, the height layers, the long/short
/// distribution, and `Γ = A ⊆ Π ↦ Π \ A`.
pub fn conjecture_properties_check(duality: &Duality<'_>) -> Result<ConjectureReport> {
    let rs = duality.system();
    let p = rs.rank();
    let h = rs.coxeter_number();
    let mut sub = SubsystemDuality::new(rs);
    let mut report = ConjectureReport::default();
    let long_simple = (0..p).filter(|&i| rs.is_long(i)).count();
    let mut all = Vec::new();
    for_each_antichain(rs, |a| all.push(a.to_vec()));
    report.antichains = all.len();

    for roots in &all {
        let gamma = Antichain::new(rs, roots.clone())?;
        let d = duality.dual(&gamma);
        let g = show(rs, roots);
        if d == gamma {
            report.self_dual += 1;
        }
        if duality.dual(&d) != gamma {
            report.involution.push(format!("{g}** != {g}"));
        }
        if gamma.len() + d.len() != p {
            report
                .generator_count
                .push(format!("{g} has {} generators, dual {}", gamma.len(), d.len()));
        }
        let long = roots.iter().chain(d.roots()).filter(|&&r| rs.is_long(r)).count();
        if long != long_simple {
            report.lengths.push(format!("{g} and its dual have {long} long roots"));
        }
        for alpha in 0..p {
            let rest: Vec<usize> = (0..p).filter(|&k| k != alpha).collect();
            let mut support = vec![true; p];
            support[alpha] = false;
            if gamma.contains(alpha) {
                let without: Vec<usize> = roots.iter().copied().filter(|&r| r != alpha).collect();
                let inside = sub.dual(&rest, &without)?;
                if !d.roots().iter().all(|&r| rs.supported_on(r, &support)) || d.roots() != inside {
                    report.removal.push(format!(
                        "{g} contains {}: dual {} but subsystem dual {}",
                        rs.format_root(alpha),
                        show(rs, d.roots()),
                        show(rs, &inside)
                    ));
                }
            }
            if roots.iter().all(|&r| rs.supported_on(r, &support)) {
                let mut want = sub.dual(&rest, roots)?;
                want.push(alpha);
                want.sort_unstable();
                if d.roots() != want {
                    report.extension.push(format!(
                        "{g} avoids {}: dual {} but expected {}",
                        rs.format_root(alpha),
                        show(rs, d.roots()),
                        show(rs, &want)
                    ));
                }
            }
        }
    }

    for k in 1..=h {
        let layer = Antichain::new(rs, rs.roots_of_height(k))?;
        let want = rs.roots_of_height(h + 1 - k);
        if duality.dual(&layer).roots() != want {
            report.height.push(format!(
                "height {k} layer maps to {}, expected height {}",
                show(rs, duality.dual(&layer).roots()),
                h + 1 - k
            ));
        }
    }

    for bits in 0u32..(1 << p) {
        let a: Vec<usize> = (0..p).filter(|&k| bits >> k & 1 == 1).collect();
        let rest: Vec<usize> = (0..p).filter(|&k| bits >> k & 1 == 0).collect();
        let d = duality.dual(&Antichain::new(rs, a.clone())?);
        if d.roots() != rest {
            report
                .simple_subsets
                .push(format!("{} maps to {}", show(rs, &a), show(rs, d.roots())));
        }
    }
    Ok(report)
}

/// All fixed points of [`dual_a`] for `sl_n`.
pub fn self_dual_ideals_a(n: usize) -> Vec<TypeACoords> {
    let rs = RootSystem::new(CartanType::A, n - 1).expect("n >= 2");
    let mut out = Vec::new();
    for_each_antichain(&rs, |a| {
        let gamma = Antichain::new(&rs, a.to_vec()).unwrap();
        let c = roots_to_coords_a(&rs, &gamma);
        if dual_a(&c) == c {
            out.push(c);
        }
    });
    out.sort();
    out
}

/// Outcome of searching for involutions under pair-local constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionSearch {
    pub antichains: Vec<Antichain>,
    /// Each solution lists the partner index of every antichain.
    pub solutions: Vec<Vec<usize>>,
    /// False if the search stopped at the budget.
    pub complete: bool,
}

/// Pairings `Γ ↔ Γ'` of antichains that satisfy every condition decidable
/// from the pair alone: complementary sizes, support away from simple roots
/// of the partner, containing simple roots avoided by the partner, height
/// layers, and the long/short distribution. Stops after `budget` solutions.
pub fn search_involutions(rs: &RootSystem, budget: usize) -> InvolutionSearch {
    let p = rs.rank();
    let h = rs.coxeter_number();
    let mut antichains = Vec::new();
    for_each_antichain(rs, |a| antichains.push(Antichain::from_sorted_unchecked(a.to_vec())));
    let n = antichains.len();
    let long_simple = (0..p).filter(|&i| rs.is_long(i)).count();
    let layer_of: HashMap<Vec<usize>, u32> = (1..=h)
        .map(|k| (rs.roots_of_height(k), k))
        .collect();
    let avoids = |a: &Antichain, alpha: usize| {
        let mut support = vec![true; p];
        support[alpha] = false;
        a.roots().iter().all(|&r| rs.supported_on(r, &support))
    };
    let one_way = |a: &Antichain, b: &Antichain| {
        (0..p).all(|alpha| {
            (!a.contains(alpha) || avoids(b, alpha)) && (!avoids(a, alpha) || b.contains(alpha))
        }) && match layer_of.get(a.roots()) {
            Some(&k) => b.roots() == rs.roots_of_height(h + 1 - k),
            None => true,
        }
    };
    let compatible = |a: &Antichain, b: &Antichain| {
        a.len() + b.len() == p
            && a.roots().iter().chain(b.roots()).filter(|&&r| rs.is_long(r)).count() == long_simple
            && one_way(a, b)
            && one_way(b, a)
    };
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| compatible(&antichains[i], &antichains[j])).collect())
        .collect();

    fn rec(
        candidates: &[Vec<usize>],
        partner: &mut Vec<Option<usize>>,
        solutions: &mut Vec<Vec<usize>>,
        budget: usize,
    ) -> bool {
        let Some(i) = partner.iter().position(Option::is_none) else {
            solutions.push(partner.iter().map(|x| x.unwrap()).collect());
            return solutions.len() < budget;
        };
        for &j in &candidates[i] {
            if partner[j].is_some() {
                continue;
            }
            partner[i] = Some(j);
            partner[j] = Some(i);
            let go_on = rec(candidates, partner, solutions, budget);
            partner[i] = None;
            partner[j] = None;
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut partner = vec![None; n];
    let mut solutions = Vec::new();
    let complete = rec(&candidates, &mut partner, &mut solutions, budget.max(1));
    InvolutionSearch {
        antichains,
        solutions,
        complete,
    }
}
