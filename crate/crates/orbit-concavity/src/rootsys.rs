//! Irreducible root systems of types A-G over exact integer arithmetic.
//!
//! Roots are integer coefficient vectors over the simple basis; every pairing
//! comes from the Cartan matrix, so no Euclidean embedding is needed. The
//! full system is generated from the Cartan matrix by the usual string
//! closure, positive roots ordered by height and then reverse-lexicographic
//! coefficient order. All downstream matrix indexings inherit this order.
//!
//! A "doubled" system (two disjoint copies of one type) models the underlying
//! real algebra of a complex simple Lie algebra.

use crate::error::Error;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn as_str(&self) -> &'static str {
        match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
            TypeLetter::E => "E",
            TypeLetter::F => "F",
            TypeLetter::G => "G",
        }
    }

    pub fn parse(s: &str) -> Result<TypeLetter, Error> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "E" => Ok(TypeLetter::E),
            "F" => Ok(TypeLetter::F),
            "G" => Ok(TypeLetter::G),
            other => Err(Error::InvalidType(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemLabel {
    /// One irreducible system, e.g. `Simple(E, 6)`.
    Simple(TypeLetter, usize),
    /// Two disjoint copies of one irreducible system; the simple basis is the
    /// concatenation of the two copies' bases.
    Doubled(TypeLetter, usize),
}

impl std::fmt::Display for SystemLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SystemLabel::Simple(t, r) => write!(f, "{}{}", t.as_str(), r),
            SystemLabel::Doubled(t, r) => write!(f, "{}{}x{}{}", t.as_str(), r, t.as_str(), r),
        }
    }
}

/// Index of a root in the ambient system's canonical list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

const NOT_A_ROOT: u32 = u32::MAX;

#[derive(Debug)]
pub struct RootSystem {
    label: SystemLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Symmetrizer: (alpha_i, alpha_j) = d[j] * cartan[i][j], all integers.
    d: Vec<i64>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    n_positive: usize,
    /// Index of -roots[i].
    neg: Vec<usize>,
    /// sum_table[i * n + j] = index of roots[i] + roots[j], or NOT_A_ROOT.
    sum_table: Vec<u32>,
    /// pair_table[i * n + j] = roots[i](H_{roots[j]}).
    pair_table: Vec<i64>,
    /// Integer coroot coordinates of each root over the simple coroots.
    coroot: Vec<Vec<i64>>,
    /// Scaled squared length (alpha, alpha) of each root.
    len2: Vec<i64>,
}

/// Build the irreducible root system of the given type and rank.
pub fn build_root_system(letter: TypeLetter, rank: usize) -> Result<Arc<RootSystem>, Error> {
    let cartan = cartan_matrix(letter, rank)?;
    let d = symmetrizer(letter, rank);
    Ok(Arc::new(RootSystem::from_cartan(
        SystemLabel::Simple(letter, rank),
        cartan,
        d,
    )))
}

/// Build two disjoint copies of the given type, used for the underlying real
/// algebra of a complex simple algebra.
pub fn build_doubled_system(letter: TypeLetter, rank: usize) -> Result<Arc<RootSystem>, Error> {
    let block = cartan_matrix(letter, rank)?;
    let db = symmetrizer(letter, rank);
    let n = 2 * rank;
    let mut cartan = vec![vec![0i64; n]; n];
    let mut d = vec![0i64; n];
    for copy in 0..2 {
        for i in 0..rank {
            d[copy * rank + i] = db[i];
            for j in 0..rank {
                cartan[copy * rank + i][copy * rank + j] = block[i][j];
            }
        }
    }
    Ok(Arc::new(RootSystem::from_cartan(
        SystemLabel::Doubled(letter, rank),
        cartan,
        d,
    )))
}

pub fn cartan_matrix(letter: TypeLetter, rank: usize) -> Result<Vec<Vec<i64>>, Error> {
    let bad = |msg: String| Err(Error::InvalidType(msg));
    let edges: Vec<(usize, usize)> = match letter {
        TypeLetter::A => {
            if rank < 1 {
                return bad(format!("A requires rank >= 1, got {rank}"));
            }
            chain(rank)
        }
        TypeLetter::B => {
            if rank < 2 {
                return bad(format!("B requires rank >= 2, got {rank}"));
            }
            chain(rank)
        }
        TypeLetter::C => {
            if rank < 3 {
                return bad(format!("C requires rank >= 3, got {rank}"));
            }
            chain(rank)
        }
        TypeLetter::D => {
            if rank < 4 {
                return bad(format!("D requires rank >= 4, got {rank}"));
            }
            let mut e = chain(rank - 1);
            e.push((rank - 3, rank - 1));
            e
        }
        TypeLetter::E => {
            if !(6..=8).contains(&rank) {
                return bad(format!("E requires rank in 6..8, got {rank}"));
            }
            // Bourbaki: chain 1-3-4-5-6(-7-8) with 2 attached to 4.
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..rank - 1 {
                e.push((i, i + 1));
            }
            e
        }
        TypeLetter::F => {
            if rank != 4 {
                return bad(format!("F requires rank 4, got {rank}"));
            }
            chain(4)
        }
        TypeLetter::G => {
            if rank != 2 {
                return bad(format!("G requires rank 2, got {rank}"));
            }
            chain(2)
        }
    };
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    // Multiplicity corrections; a[i][j] = alpha_i(H_{alpha_j}).
    match letter {
        TypeLetter::B => a[rank - 2][rank - 1] = -2,
        TypeLetter::C => a[rank - 1][rank - 2] = -2,
        TypeLetter::F => a[1][2] = -2,
        TypeLetter::G => a[1][0] = -3,
        _ => {}
    }
    Ok(a)
}

fn chain(rank: usize) -> Vec<(usize, usize)> {
    (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect()
}

fn symmetrizer(letter: TypeLetter, rank: usize) -> Vec<i64> {
    match letter {
        TypeLetter::A | TypeLetter::D | TypeLetter::E => vec![1; rank],
        TypeLetter::B => {
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        TypeLetter::C => {
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            d
        }
        TypeLetter::F => vec![2, 2, 1, 1],
        TypeLetter::G => vec![1, 3],
    }
}

impl RootSystem {
    fn from_cartan(label: SystemLabel, cartan: Vec<Vec<i64>>, d: Vec<i64>) -> RootSystem {
        let rank = cartan.len();
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(
                    d[j] * cartan[i][j],
                    d[i] * cartan[j][i],
                    "symmetrizer mismatch at ({i},{j})"
                );
            }
        }
        // Positive roots by string closure over heights.
        let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            known.insert(v);
        }
        let mut frontier: Vec<Vec<i64>> = known.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..rank {
                    // q = steps down the alpha_i-string from beta.
                    let mut q = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        let is_simple_neg = probe.iter().enumerate().all(|(k, &c)| {
                            if k == i {
                                c == -1
                            } else {
                                c == 0
                            }
                        });
                        if is_simple_neg || known.contains(&probe) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i64 = (0..rank).map(|k| beta[k] * cartan[k][i]).sum();
                    let p = q - pair;
                    if p > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains(&up) {
                            known.insert(up.clone());
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut positives: Vec<Vec<i64>> = known.into_iter().collect();
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_positive = positives.len();
        let mut roots = positives;
        for i in 0..n_positive {
            let neg: Vec<i64> = roots[i].iter().map(|c| -c).collect();
            roots.push(neg);
        }
        let n = roots.len();
        let mut index = HashMap::with_capacity(n);
        for (i, r) in roots.iter().enumerate() {
            index.insert(r.clone(), i);
        }
        let neg: Vec<usize> = (0..n)
            .map(|i| {
                if i < n_positive {
                    i + n_positive
                } else {
                    i - n_positive
                }
            })
            .collect();
        let mut sum_table = vec![NOT_A_ROOT; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: Vec<i64> = roots[i]
                    .iter()
                    .zip(&roots[j])
                    .map(|(a, b)| a + b)
                    .collect();
                if let Some(&k) = index.get(&s) {
                    sum_table[i * n + j] = k as u32;
                }
            }
        }
        // Squared lengths and integer coroot coordinates.
        let len2: Vec<i64> = roots
            .iter()
            .map(|r| {
                (0..rank)
                    .map(|i| (0..rank).map(|j| r[i] * r[j] * d[j] * cartan[i][j]).sum::<i64>())
                    .sum()
            })
            .collect();
        let coroot: Vec<Vec<i64>> = roots
            .iter()
            .enumerate()
            .map(|(idx, r)| {
                (0..rank)
                    .map(|i| {
                        let num = r[i] * 2 * d[i];
                        assert_eq!(num % len2[idx], 0, "coroot coordinates must be integral");
                        num / len2[idx]
                    })
                    .collect()
            })
            .collect();
        let mut pair_table = vec![0i64; n * n];
        for a in 0..n {
            // v[j] = alpha_j(H_{roots[a]})
            let v: Vec<i64> = (0..rank)
                .map(|j| (0..rank).map(|i| cartan[j][i] * coroot[a][i]).sum())
                .collect();
            for b in 0..n {
                pair_table[b * n + a] = (0..rank).map(|j| roots[b][j] * v[j]).sum();
            }
        }
        for a in 0..n {
            debug_assert_eq!(pair_table[a * n + a], 2);
        }
        RootSystem {
            label,
            rank,
            cartan,
            d,
            roots,
            index,
            n_positive,
            neg,
            sum_table,
            pair_table,
            coroot,
            len2,
        }
    }

    pub fn label(&self) -> SystemLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// Symmetrizer: `(alpha_i, alpha_j) = symmetrizer()[j] * cartan()[i][j]`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn n_positive(&self) -> usize {
        self.n_positive
    }

    pub fn root_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId)
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.n_positive).map(RootId)
    }

    pub fn coeffs(&self, id: RootId) -> &[i64] {
        &self.roots[id.0]
    }

    pub fn root_id(&self, coeffs: &[i64]) -> Option<RootId> {
        self.index.get(coeffs).copied().map(RootId)
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    pub fn simple(&self, i: usize) -> RootId {
        let mut v = vec![0i64; self.rank];
        v[i] = 1;
        self.root_id(&v).expect("simple root present")
    }

    pub fn is_simple(&self, id: RootId) -> Option<usize> {
        let c = self.coeffs(id);
        let mut found = None;
        for (i, &x) in c.iter().enumerate() {
            match x {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub fn neg(&self, id: RootId) -> RootId {
        RootId(self.neg[id.0])
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id.0 < self.n_positive
    }

    pub fn height(&self, id: RootId) -> i64 {
        self.roots[id.0].iter().sum()
    }

    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        let v = self.sum_table[a.0 * self.roots.len() + b.0];
        if v == NOT_A_ROOT {
            None
        } else {
            Some(RootId(v as usize))
        }
    }

    /// beta(H_alpha), the integer coroot pairing.
    pub fn pairing(&self, beta: RootId, alpha: RootId) -> i64 {
        self.pair_table[beta.0 * self.roots.len() + alpha.0]
    }

    /// lambda(H_alpha) for an arbitrary lattice vector lambda.
    pub fn pairing_vec(&self, lambda: &[i64], alpha: RootId) -> i64 {
        (0..self.rank)
            .map(|j| {
                lambda[j]
                    * (0..self.rank)
                        .map(|i| self.cartan[j][i] * self.coroot[alpha.0][i])
                        .sum::<i64>()
            })
            .sum()
    }

    /// Scaled squared length (alpha, alpha).
    pub fn len2(&self, id: RootId) -> i64 {
        self.len2[id.0]
    }

    /// Integer coordinates of H_alpha over the simple coroots.
    pub fn coroot_coords(&self, id: RootId) -> &[i64] {
        &self.coroot[id.0]
    }

    /// The alpha-string through beta: beta - q*alpha, ..., beta + p*alpha.
    /// Returns (p, q); rejects beta in {alpha, -alpha}.
    pub fn root_string(&self, alpha: RootId, beta: RootId) -> Result<(i64, i64), Error> {
        if beta == alpha || beta == self.neg(alpha) {
            return Err(Error::DegenerateString);
        }
        let a = self.coeffs(alpha).to_vec();
        let b = self.coeffs(beta).to_vec();
        let mut p = 0i64;
        loop {
            let probe: Vec<i64> = b
                .iter()
                .zip(&a)
                .map(|(x, y)| x + (p + 1) * y)
                .collect();
            if self.is_root(&probe) {
                p += 1;
            } else {
                break;
            }
        }
        let mut q = 0i64;
        loop {
            let probe: Vec<i64> = b
                .iter()
                .zip(&a)
                .map(|(x, y)| x - (q + 1) * y)
                .collect();
            if self.is_root(&probe) {
                q += 1;
            } else {
                break;
            }
        }
        Ok((p, q))
    }

    /// Reflection of an arbitrary lattice vector in the hyperplane of alpha.
    pub fn reflect(&self, alpha: RootId, lambda: &[i64]) -> Vec<i64> {
        let k = self.pairing_vec(lambda, alpha);
        lambda
            .iter()
            .zip(self.coeffs(alpha))
            .map(|(l, a)| l - k * a)
            .collect()
    }

    pub fn reflect_root(&self, alpha: RootId, beta: RootId) -> RootId {
        let v = self.reflect(alpha, self.coeffs(beta));
        self.root_id(&v).expect("reflection preserves the root set")
    }

    /// Action of the longest element of the Weyl subgroup generated by the
    /// reflections in the simple subset S, as a lattice map. Computed by
    /// greedy descent: while some s in S is still sent to a positive root,
    /// append that reflection.
    pub fn longest_element_action(&self, s_set: &BTreeSet<usize>) -> LatticeMap {
        let mut w = LatticeMap::identity(self.rank);
        loop {
            let mut progressed = false;
            for &i in s_set {
                let image = w.apply(&unit_vec(self.rank, i));
                if self.root_id(&image).map(|r| self.is_positive(r)) == Some(true) {
                    // w <- w . s_i
                    let refl = self.reflection_map(i);
                    w = w.compose(&refl);
                    progressed = true;
                }
            }
            if !progressed {
                break;
            }
        }
        w
    }

    fn reflection_map(&self, i: usize) -> LatticeMap {
        let mut m = LatticeMap::identity(self.rank);
        for j in 0..self.rank {
            // s_i(alpha_j) = alpha_j - a_{ji} alpha_i
            m.matrix[i][j] -= self.cartan[j][i];
        }
        m
    }

    /// The root of greatest height (unique for irreducible systems).
    pub fn highest_root(&self) -> RootId {
        RootId(self.n_positive - 1)
    }
}

fn unit_vec(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[i] = 1;
    v
}

/// An integer-linear map of the root lattice, acting on coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    /// `matrix[i][j]`: coefficient of alpha_i in the image of alpha_j.
    pub matrix: Vec<Vec<i64>>,
}

impl LatticeMap {
    pub fn identity(rank: usize) -> LatticeMap {
        let mut matrix = vec![vec![0i64; rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        LatticeMap { matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let rank = self.rank();
        (0..rank)
            .map(|i| (0..rank).map(|j| self.matrix[i][j] * v[j]).sum())
            .collect()
    }

    /// self . other (apply `other` first).
    pub fn compose(&self, other: &LatticeMap) -> LatticeMap {
        let rank = self.rank();
        let mut matrix = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                matrix[i][j] = (0..rank).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum();
            }
        }
        LatticeMap { matrix }
    }

    pub fn is_identity(&self) -> bool {
        *self == LatticeMap::identity(self.rank())
    }

    pub fn trace(&self) -> i64 {
        (0..self.rank()).map(|i| self.matrix[i][i]).sum()
    }
}

/// Classical root counts, used as construction invariants.
pub fn classical_root_count(letter: TypeLetter, rank: usize) -> usize {
    match letter {
        TypeLetter::A => rank * (rank + 1),
        TypeLetter::B | TypeLetter::C => 2 * rank * rank,
        TypeLetter::D => 2 * rank * (rank - 1),
        TypeLetter::E => match rank {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        TypeLetter::F => 48,
        TypeLetter::G => 12,
    }
}

/// Complex dimension of the simple algebra of the given type.
pub fn algebra_dimension(letter: TypeLetter, rank: usize) -> usize {
    classical_root_count(letter, rank) + rank
}
