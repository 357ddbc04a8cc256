//! Dynkin diagram data for the simple families A through G in Bourbaki
//! numbering: Cartan matrix, exact inverse, diagram structure, highest-root
//! marks and comarks, and the center of the simply connected group as
//! residue vectors.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One};
use thiserror::Error;

use crate::linalg::{self, q0, qi, Q};

/// The nine infinite-or-exceptional simple families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(SpecError::UnknownFamily {
                family: other.to_string(),
            }),
        }
    }
}

/// Errors rejecting a (family, rank) pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("unknown family `{family}`")]
    UnknownFamily { family: String },
    #[error("rank {rank} is not valid for family {family} (valid: {valid})")]
    InvalidRank {
        family: Family,
        rank: usize,
        valid: &'static str,
    },
}

/// A validated (family, rank) pair. Construction is the only place rank
/// bounds are checked; everything downstream may assume validity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self, SpecError> {
        // The upper bound keeps vertex sets representable as u32 masks.
        let (ok, valid) = match family {
            Family::A => (rank >= 1 && rank <= 30, "1 <= n <= 30"),
            Family::B => (rank >= 2 && rank <= 30, "2 <= n <= 30"),
            Family::C => (rank >= 2 && rank <= 30, "2 <= n <= 30"),
            Family::D => (rank >= 4 && rank <= 30, "4 <= n <= 30"),
            Family::E => ((6..=8).contains(&rank), "n in {6, 7, 8}"),
            Family::F => (rank == 4, "n = 4"),
            Family::G => (rank == 2, "n = 2"),
        };
        if ok {
            Ok(RootSystemSpec { family, rank })
        } else {
            Err(SpecError::InvalidRank {
                family,
                rank,
                valid,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A simple root, identified by its 0-based Bourbaki index. Displays as
/// "a1".."a8" style 1-based names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub usize);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0 + 1)
    }
}

impl Vertex {
    /// Parse "a3"-style names; `rank` bounds the index.
    pub fn parse(name: &str, rank: usize) -> Option<Vertex> {
        let idx: usize = name.strip_prefix('a')?.parse().ok()?;
        (1..=rank).contains(&idx).then(|| Vertex(idx - 1))
    }
}

/// A set of simple roots, stored as a bitmask (rank <= 32).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn full(rank: usize) -> Self {
        VertexSet(if rank >= 32 { u32::MAX } else { (1 << rank) - 1 })
    }

    pub fn single(v: Vertex) -> Self {
        VertexSet(1 << v.0)
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v.0;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v.0);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 & (1 << v.0) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        VertexSet(self.0 | (1 << v.0))
    }

    pub fn is_subset(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0).map(Vertex)
    }

    pub fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Root length class. In the simply laced types every root is long.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootLength {
    Long,
    Short,
}

/// An edge of the diagram with its bond multiplicity
/// `n(a, b) * n(b, a)` in {1, 2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    pub a: Vertex,
    pub b: Vertex,
    pub multiplicity: i64,
}

/// Immutable diagram data. `cartan[i][j] = n(alpha_i, alpha_j)`, the
/// evaluation of the root `alpha_i` on the coroot of `alpha_j`; rows hold a
/// fixed root, so a function's defect at `alpha_i` is the dot product of row
/// `i` with its coroot values.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystemData {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<Q>>,
    adjacency: Vec<Vec<Vertex>>,
    bonds: Vec<Bond>,
    lengths: Vec<RootLength>,
}

/// Build the diagram data for a validated spec. Infallible: every invalid
/// (family, rank) pair is already rejected by [`RootSystemSpec::new`].
pub fn build_root_system(spec: RootSystemSpec) -> RootSystemData {
    let n = spec.rank();
    let mut cartan = vec![vec![0i64; n]; n];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain_edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    let mut lengths = vec![RootLength::Long; n];

    match spec.family() {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                chain_edge(&mut cartan, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                chain_edge(&mut cartan, i, i + 1);
            }
            // alpha_n is the unique short root; the long root of the double
            // bond evaluates to -2 on its coroot.
            cartan[n - 2][n - 1] = -2;
            lengths[n - 1] = RootLength::Short;
        }
        Family::C => {
            for i in 0..n - 1 {
                chain_edge(&mut cartan, i, i + 1);
            }
            cartan[n - 1][n - 2] = -2;
            for l in lengths.iter_mut().take(n - 1) {
                *l = RootLength::Short;
            }
        }
        Family::D => {
            for i in 0..n - 3 {
                chain_edge(&mut cartan, i, i + 1);
            }
            chain_edge(&mut cartan, n - 3, n - 2);
            chain_edge(&mut cartan, n - 3, n - 1);
        }
        Family::E => {
            // Bourbaki: chain a1-a3-a4-...-an with a2 hanging off a4.
            chain_edge(&mut cartan, 0, 2);
            for i in 2..n - 1 {
                chain_edge(&mut cartan, i, i + 1);
            }
            chain_edge(&mut cartan, 1, 3);
        }
        Family::F => {
            for i in 0..3 {
                chain_edge(&mut cartan, i, i + 1);
            }
            cartan[1][2] = -2;
            lengths[2] = RootLength::Short;
            lengths[3] = RootLength::Short;
        }
        Family::G => {
            cartan[0][1] = -1;
            cartan[1][0] = -3;
            lengths[0] = RootLength::Short;
        }
    }

    let cartan_q: Vec<Vec<Q>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| qi(x)).collect())
        .collect();
    let cartan_inverse =
        linalg::invert(&cartan_q).expect("Cartan matrices of simple types are invertible");

    let mut adjacency = vec![Vec::new(); n];
    let mut bonds = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if cartan[i][j] != 0 {
                adjacency[i].push(Vertex(j));
                adjacency[j].push(Vertex(i));
                bonds.push(Bond {
                    a: Vertex(i),
                    b: Vertex(j),
                    multiplicity: cartan[i][j] * cartan[j][i],
                });
            }
        }
    }

    RootSystemData {
        spec,
        cartan,
        cartan_inverse,
        adjacency,
        bonds,
        lengths,
    }
}

impl RootSystemData {
    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Exact inverse of the Cartan matrix. Column `b` holds the coroot-basis
    /// coordinates of the fundamental coweight dual to `alpha_b`; every entry
    /// is strictly positive.
    pub fn cartan_inverse(&self) -> &[Vec<Q>] {
        &self.cartan_inverse
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.rank()).map(Vertex)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v.0]
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    pub fn length(&self, v: Vertex) -> RootLength {
        self.lengths[v.0]
    }

    /// Largest bond multiplicity in the diagram: 1 for the simply laced
    /// types, 2 for B/C/F, 3 for G.
    pub fn max_bond_multiplicity(&self) -> i64 {
        self.bonds.iter().map(|b| b.multiplicity).max().unwrap_or(1)
    }

    /// All positive roots, as integer coordinate vectors in the simple-root
    /// basis, grouped in height order. Closure by root strings: a simple
    /// root is added while the string length `p - n(v, alpha_i)` stays
    /// positive.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut known: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            known.insert(e.clone());
            frontier.push(e);
        }
        let mut all: Vec<Vec<i64>> = frontier.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for i in 0..n {
                    // n(v, alpha_i) is linear in v: dot with column i.
                    let pairing: i64 = (0..n).map(|j| v[j] * self.cartan[j][i]).sum();
                    let mut p = 0i64;
                    let mut w = v.clone();
                    loop {
                        w[i] -= 1;
                        if w.iter().all(|&x| x == 0) || !known.contains(&w) {
                            break;
                        }
                        p += 1;
                    }
                    if p - pairing > 0 {
                        let mut up = v.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up.clone());
                            all.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        all
    }

    /// Marks and comarks of the highest root.
    pub fn highest_root(&self) -> HighestRootData {
        let roots = self.positive_roots();
        let h = roots
            .iter()
            .max_by_key(|v| v.iter().sum::<i64>())
            .expect("positive roots are nonempty")
            .clone();
        // The highest root is the unique dominant one.
        for i in 0..self.rank() {
            let pairing: i64 = (0..self.rank()).map(|j| h[j] * self.cartan[j][i]).sum();
            debug_assert!(pairing >= 0, "highest root must be dominant");
        }
        // Comarks rescale by length: alpha = (len^2(alpha)/2) alpha-vee, and
        // the highest root is always long.
        let m = self.max_bond_multiplicity();
        let g = h
            .iter()
            .enumerate()
            .map(|(i, &hi)| match self.lengths[i] {
                RootLength::Long => hi,
                RootLength::Short => {
                    assert_eq!(hi % m, 0, "comarks are integers");
                    hi / m
                }
            })
            .collect();
        HighestRootData { h, g }
    }

    /// Generators of the center of the simply connected group, i.e. of the
    /// coweight lattice modulo the coroot lattice, as residue vectors
    /// (columns of the Cartan inverse span them mod 1). Computed through the
    /// Smith normal form of the Cartan matrix; trivial factors are dropped.
    pub fn center_generators(&self) -> Vec<CentralElement> {
        let n = self.rank();
        let a: Vec<Vec<BigInt>> = self
            .cartan
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let (u, d) = linalg::smith_normal_form(&a);
        let u_q: Vec<Vec<Q>> = u
            .iter()
            .map(|row| row.iter().map(|x| Q::from_integer(x.clone())).collect())
            .collect();
        let u_inv = linalg::invert(&u_q).expect("row transform is unimodular");

        let mut gens = Vec::new();
        for (i, di) in d.iter().enumerate() {
            if di > &BigInt::one() {
                // Generator i is M * u^{-1} e_i reduced mod 1.
                let col: Vec<Q> = (0..n).map(|r| u_inv[r][i].clone()).collect();
                let coweight = linalg::mat_vec(&self.cartan_inverse, &col);
                let residues: Vec<Q> = coweight.into_iter().map(frac_part).collect();
                let elem = CentralElement::from_residues(self, residues)
                    .expect("smith form yields center elements");
                assert_eq!(
                    elem.order(),
                    u64::try_from(di).expect("center orders are small"),
                    "generator order matches its invariant factor"
                );
                gens.push(elem);
            }
        }
        gens
    }

    /// Order of the full center: |det(cartan)|.
    pub fn center_order(&self) -> u64 {
        let d = linalg::det_int(&self.cartan);
        u64::try_from(d.magnitude().clone()).expect("center orders are small")
    }
}

/// Marks `h` (simple-root coordinates of the highest root) and comarks `g`
/// (coroot coordinates of its coroot).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestRootData {
    pub h: Vec<i64>,
    pub g: Vec<i64>,
}

/// Reduce a rational to its fractional part in [0, 1).
pub fn frac_part(x: Q) -> Q {
    let f = &x - x.floor();
    f
}

/// Errors rejecting a central-class residue vector.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("residue vector length {got} does not match rank {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("residues are not in the center: cartan * residues is not integral at {vertex}")]
    NotCentral { vertex: Vertex },
}

/// A central element of the simply connected group, represented by the
/// residues of the fundamental weights on it: entry `a` is
/// `varpi_a(c) mod 1`, a rational in [0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralElement {
    residues: Vec<Q>,
    order: u64,
}

impl CentralElement {
    /// The identity class.
    pub fn trivial(rank: usize) -> Self {
        CentralElement {
            residues: vec![q0(); rank],
            order: 1,
        }
    }

    /// Validate and normalize a residue vector: each entry is reduced mod 1
    /// and the vector must lie in the coweight lattice modulo the coroot
    /// lattice, i.e. `cartan * residues` must be integral.
    pub fn from_residues(data: &RootSystemData, residues: Vec<Q>) -> Result<Self, CenterError> {
        let n = data.rank();
        if residues.len() != n {
            return Err(CenterError::RankMismatch {
                got: residues.len(),
                rank: n,
            });
        }
        let residues: Vec<Q> = residues.into_iter().map(frac_part).collect();
        for i in 0..n {
            let mut acc = q0();
            for j in 0..n {
                acc += qi(data.cartan()[i][j]) * &residues[j];
            }
            if !acc.is_integer() {
                return Err(CenterError::NotCentral { vertex: Vertex(i) });
            }
        }
        let order = residues
            .iter()
            .map(|r| u64::try_from(r.denom().magnitude().clone()).expect("small denominators"))
            .fold(1u64, num::integer::lcm);
        Ok(CentralElement { residues, order })
    }

    pub fn residues(&self) -> &[Q] {
        &self.residues
    }

    pub fn residue(&self, v: Vertex) -> &Q {
        &self.residues[v.0]
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Group operation: residues add mod 1.
    pub fn add(&self, other: &CentralElement, data: &RootSystemData) -> CentralElement {
        let residues = self
            .residues
            .iter()
            .zip(&other.residues)
            .map(|(a, b)| frac_part(a + b))
            .collect();
        CentralElement::from_residues(data, residues).expect("sum of central elements is central")
    }

    /// e-fold sum of self.
    pub fn power(&self, e: u64, data: &RootSystemData) -> CentralElement {
        let residues = self
            .residues
            .iter()
            .map(|r| frac_part(r * qi(e as i64)))
            .collect();
        CentralElement::from_residues(data, residues).expect("power of a central element is central")
    }
}
