//! Cartan matrices, Dynkin data and root systems of the simple Lie algebras.
//!
//! Node orderings are fixed per family:
//!
//! * `A_l`: a simple chain `1 - 2 - ... - l`.
//! * `B_l`: chain, `l` is the short root (`C[l-1][l] = -2`).
//! * `C_l`: chain, `l` is the long root (`C[l][l-1] = -2`).
//! * `D_l`: chain `1 - ... - (l-1)` with node `l` attached to `l-2`.
//! * `E_l`: chain `1 - ... - (l-1)` with node `l` attached to `l-3`. For
//!   `E8` this puts `8` on `5`, giving highest-root marks `(2,3,4,5,6,4,2,3)`.
//! * `F4`: chain with the double bond between `2` (long) and `3` (short).
//! * `G2`: `1` short, `2` long, `C = [[2,-1],[-3,2]]`.
//!
//! Throughout, `C[i][j] = 2(a_i, a_j) / (a_j, a_j)` and long roots have
//! squared length 2.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact_poly::{rat, rational_to_f64, RationalMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid rank {rank} for family {family}: {constraint}")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },
    #[error("cannot parse algebra name {0:?}: expected <family><rank> with family one of A, B, C, D, E, F, G (e.g. E8, A5, B3)")]
    Parse(String),
    #[error("malformed Cartan matrix: {0}")]
    MalformedCartan(String),
    #[error("not a finite-type simple Lie algebra: {0}")]
    InvalidAlgebra(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn rank_constraint(self) -> (&'static str, fn(usize) -> bool) {
        match self {
            Family::A => ("rank >= 1", |r| r >= 1),
            Family::B => ("rank >= 2", |r| r >= 2),
            Family::C => ("rank >= 2", |r| r >= 2),
            Family::D => ("rank >= 3", |r| r >= 3),
            Family::E => ("rank in {6, 7, 8}", |r| (6..=8).contains(&r)),
            Family::F => ("rank = 4", |r| r == 4),
            Family::G => ("rank = 2", |r| r == 2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple Lie algebra named by family letter and rank, e.g. `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    family: Family,
    rank: usize,
}

impl AlgebraId {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let (constraint, ok) = family.rank_constraint();
        if ok(rank) {
            Ok(Self { family, rank })
        } else {
            Err(RootSystemError::InvalidRank {
                family,
                rank,
                constraint,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn is_e8(&self) -> bool {
        self.family == Family::E && self.rank == 8
    }

    /// Every valid algebra of rank at most `max_rank`, ordered by family then rank.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<AlgebraId> {
        Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |r| AlgebraId::new(f, r).ok()))
            .collect()
    }

    /// The simply-laced algebras of rank at most `max_rank`.
    pub fn simply_laced_up_to_rank(max_rank: usize) -> Vec<AlgebraId> {
        Self::all_up_to_rank(max_rank)
            .into_iter()
            .filter(AlgebraId::is_simply_laced)
            .collect()
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootSystemError::Parse(s.to_string())),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RootSystemError::Parse(s.to_string()));
        }
        let rank = digits
            .parse()
            .map_err(|_| RootSystemError::Parse(s.to_string()))?;
        AlgebraId::new(family, rank)
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Integer Cartan matrix of a (candidate) finite-type algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates the structural invariants: square, `2` on the diagonal,
    /// off-diagonal entries in `{0,-1,-2,-3}`, symmetric zero pattern and a
    /// positive determinant.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, RootSystemError> {
        let n = entries.len();
        if n == 0 {
            return Err(RootSystemError::MalformedCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(RootSystemError::MalformedCartan(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 2 {
                    return Err(RootSystemError::MalformedCartan(format!(
                        "diagonal entry ({0},{0}) is {v}, expected 2",
                        i + 1
                    )));
                }
                if i != j && !(-3..=0).contains(&v) {
                    return Err(RootSystemError::MalformedCartan(format!(
                        "off-diagonal entry ({},{}) is {v}, expected 0, -1, -2 or -3",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(RootSystemError::MalformedCartan(format!(
                        "entries ({},{}) and ({},{}) must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let det = RationalMatrix::from_integers(&entries)
            .expect("square")
            .determinant();
        if !det.is_positive() {
            return Err(RootSystemError::MalformedCartan(format!(
                "determinant {det} is not positive"
            )));
        }
        Ok(Self { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `A = 2I - C`, the generalized Dynkin adjacency matrix.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 } else { 0 } - self.entries[i][j])
                    .collect()
            })
            .collect()
    }

    pub fn adjacency_exact(&self) -> RationalMatrix {
        RationalMatrix::from_integers(&self.adjacency()).expect("square")
    }

    /// Neighbours of node `i` in the Dynkin diagram.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&j| j != i && self.entries[i][j] != 0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for j in self.neighbours(i) {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Cartan matrix of `id` in the documented node ordering (see module docs).
pub fn cartan_matrix(id: AlgebraId) -> CartanMatrix {
    let l = id.rank();
    let mut c = vec![vec![0i64; l]; l];
    let mut bond = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match id.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 1..l {
                bond(i - 1, i);
            }
        }
        Family::D => {
            for i in 1..l - 1 {
                bond(i - 1, i);
            }
            bond(l - 3, l - 1);
        }
        Family::E => {
            for i in 1..l - 1 {
                bond(i - 1, i);
            }
            bond(l - 4, l - 1);
        }
    }
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    match id.family() {
        Family::B => c[l - 2][l - 1] = -2,
        Family::C => c[l - 1][l - 2] = -2,
        Family::F => c[1][2] = -2,
        Family::G => c[1][0] = -3,
        _ => {}
    }
    CartanMatrix::new(c).expect("standard Cartan matrices are valid")
}

/// Positive roots, symmetrizers and highest-root data generated from a
/// Cartan matrix.
#[derive(Debug, Clone)]
pub struct RootSystem {
    algebra: Option<AlgebraId>,
    cartan: CartanMatrix,
    positive_roots: Vec<Vec<i64>>,
    symmetrizers: Vec<BigRational>,
    gram: RationalMatrix,
    highest_root: Vec<i64>,
    coxeter_number: usize,
}

impl RootSystem {
    /// Root system of a named algebra.
    pub fn for_algebra(id: AlgebraId) -> Self {
        let mut rs = generate_roots(&cartan_matrix(id)).expect("standard algebras are finite type");
        rs.algebra = Some(id);
        rs
    }

    pub fn algebra(&self) -> Option<AlgebraId> {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.cartan.size()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Positive roots as coefficient vectors in the simple-root basis,
    /// ordered by height and then with earlier simple roots first.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// `d_i = (a_i, a_i) / 2`.
    pub fn symmetrizers(&self) -> &[BigRational] {
        &self.symmetrizers
    }

    /// `G[i][j] = (a_i, a_j) = C[i][j] d_j`.
    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// Coefficients `n_j` of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.highest_root
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    /// The affine root `a_0 = -highest_root`.
    pub fn affine_root(&self) -> Vec<i64> {
        self.highest_root.iter().map(|&v| -v).collect()
    }

    /// Exact inner product of two roots given by simple-root coefficients.
    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> BigRational {
        let n = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] != 0 {
                    acc += self.gram.get(i, j) * rat(a[i] * b[j]);
                }
            }
        }
        acc
    }

    /// `<b, a_i^vee> = 2(b, a_i)/(a_i, a_i) = sum_k b_k C[k][i]`.
    fn coroot_pairing(&self, b: &[i64], i: usize) -> i64 {
        coroot_pairing(&self.cartan, b, i)
    }

    /// Simple reflection `s_i(b) = b - <b, a_i^vee> a_i`.
    pub fn reflect(&self, b: &[i64], i: usize) -> Vec<i64> {
        let mut out = b.to_vec();
        out[i] -= self.coroot_pairing(b, i);
        out
    }
}

fn coroot_pairing(cartan: &CartanMatrix, b: &[i64], i: usize) -> i64 {
    b.iter()
        .enumerate()
        .map(|(k, &bk)| bk * cartan.get(k, i))
        .sum()
}

/// Largest number of positive roots any finite-type algebra of rank `l` has.
fn positive_root_bound(l: usize) -> usize {
    (l * l).max(120)
}

/// Solves `C[i][j] d_j = C[j][i] d_i` along the Dynkin diagram and
/// normalizes so the longest roots have `d = 1`.
fn symmetrizers(cartan: &CartanMatrix) -> Result<Vec<BigRational>, RootSystemError> {
    let n = cartan.size();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].clone().expect("visited");
        for j in cartan.neighbours(i) {
            let dj = &di * rat(cartan.get(j, i)) / rat(cartan.get(i, j));
            match &d[j] {
                None => {
                    d[j] = Some(dj);
                    queue.push_back(j);
                }
                Some(existing) if *existing != dj => {
                    return Err(RootSystemError::InvalidAlgebra(
                        "Cartan matrix is not symmetrizable".into(),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    let d: Vec<BigRational> = d
        .into_iter()
        .map(|v| v.expect("connected diagram"))
        .collect();
    let max = d.iter().max().cloned().expect("nonempty");
    Ok(d.into_iter().map(|v| v / &max).collect())
}

/// Breadth-first reflection closure from the simple roots.
pub fn generate_roots(cartan: &CartanMatrix) -> Result<RootSystem, RootSystemError> {
    let l = cartan.size();
    if !cartan.is_connected() {
        return Err(RootSystemError::InvalidAlgebra(
            "Dynkin diagram is disconnected (not simple)".into(),
        ));
    }
    let symmetrizers = symmetrizers(cartan)?;
    let gram = RationalMatrix::from_fn(l, |i, j| rat(cartan.get(i, j)) * &symmetrizers[j]);

    let bound = positive_root_bound(l);
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|k| i64::from(k == i)).collect())
        .collect();
    let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut queue: VecDeque<Vec<i64>> = simple.into();
    while let Some(b) = queue.pop_front() {
        for i in 0..l {
            let p = coroot_pairing(cartan, &b, i);
            if p == 0 {
                continue;
            }
            let mut r = b.clone();
            r[i] -= p;
            let any_pos = r.iter().any(|&v| v > 0);
            let any_neg = r.iter().any(|&v| v < 0);
            if any_pos && any_neg {
                return Err(RootSystemError::InvalidAlgebra(format!(
                    "reflection produced a root of mixed sign {r:?}"
                )));
            }
            if any_neg || !seen.insert(r.clone()) {
                continue;
            }
            // heights of positive roots never exceed their number
            if r.iter().sum::<i64>() as usize > bound {
                return Err(RootSystemError::InvalidAlgebra(format!(
                    "root height exceeds {bound}; not finite type"
                )));
            }
            roots.push(r.clone());
            queue.push_back(r);
            if roots.len() > bound {
                return Err(RootSystemError::InvalidAlgebra(format!(
                    "more than {bound} positive roots generated; not finite type"
                )));
            }
        }
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    let highest_root: Vec<i64> = (0..l)
        .map(|k| roots.iter().map(|r| r[k]).max().expect("nonempty"))
        .collect();
    if !seen.contains(&highest_root) {
        return Err(RootSystemError::InvalidAlgebra(
            "componentwise maximum is not a root".into(),
        ));
    }
    let coxeter_number = 1 + highest_root.iter().sum::<i64>() as usize;

    Ok(RootSystem {
        algebra: None,
        cartan: cartan.clone(),
        positive_roots: roots,
        symmetrizers,
        gram,
        highest_root,
        coxeter_number,
    })
}

/// Euclidean coordinates of the roots of a root system.
#[derive(Debug, Clone)]
pub struct EmbeddedRoots {
    /// Rows of the Cholesky factor of the Gram matrix; `simple[i]` is `a_{i+1}`.
    pub simple: Vec<Vec<f64>>,
    /// `a_0 = -highest_root`.
    pub affine: Vec<f64>,
    /// Coordinates for each entry of [`RootSystem::positive_roots`].
    pub positive: Vec<Vec<f64>>,
}

impl EmbeddedRoots {
    /// The `l + 1` vectors `a_0, a_1, ..., a_l`.
    pub fn extended_simple(&self) -> Vec<Vec<f64>> {
        std::iter::once(self.affine.clone())
            .chain(self.simple.iter().cloned())
            .collect()
    }
}

fn cholesky(g: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = g.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                l[i][i] = (g[i][i] - s).sqrt();
            } else {
                l[i][j] = (g[i][j] - s) / l[j][j];
            }
        }
    }
    l
}

fn combine(basis: &[Vec<f64>], coeffs: &[i64]) -> Vec<f64> {
    let n = basis.len();
    (0..n)
        .map(|a| {
            coeffs
                .iter()
                .zip(basis)
                .map(|(&c, row)| c as f64 * row[a])
                .sum()
        })
        .collect()
}

/// Coordinates from the lower-triangular factorization `G = L L^T`.
pub fn embed_roots(rs: &RootSystem) -> EmbeddedRoots {
    let simple = cholesky(&rs.gram.to_f64());
    let affine = combine(&simple, &rs.affine_root());
    let positive = rs
        .positive_roots
        .iter()
        .map(|r| combine(&simple, r))
        .collect();
    EmbeddedRoots {
        simple,
        affine,
        positive,
    }
}

/// Squared length of a root from exact data, as `f64`.
pub fn root_length_squared(rs: &RootSystem, root: &[i64]) -> f64 {
    rational_to_f64(&rs.inner_product(root, root))
}
