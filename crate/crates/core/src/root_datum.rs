//! Root data in an explicit basis of the character lattice.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::linalg::rational::{inverse, rank_of, solve_combination};
use crate::linalg::{Matrix, Vector};
use crate::{Int, IntMat, IntVec, Rat, RatVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
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
        fmt::Debug::fmt(self, f)
    }
}

/// Finite Cartan type as a sorted list of simple components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CartanType(pub Vec<(Family, usize)>);

impl CartanType {
    pub fn rank(&self) -> usize {
        self.0.iter().map(|(_, r)| r).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self.0.iter().map(|(fam, r)| format!("{fam}{r}")).collect();
        f.write_str(&parts.join("x"))
    }
}

/// Simple roots in `X`, simple coroots in the dual basis of `Y`; the pairing
/// is the dot product, so the Cartan entry `a_ij` is `coroot_i . root_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<IntVec>,
    coroots: Vec<IntVec>,
    cartan: IntMat,
    cartan_type: CartanType,
}

impl RootDatum {
    pub fn new(rank: usize, roots: Vec<IntVec>, coroots: Vec<IntVec>) -> Result<Self> {
        if roots.len() != coroots.len() {
            return Err(Error::InvalidRootDatum(format!(
                "{} simple roots but {} simple coroots",
                roots.len(),
                coroots.len()
            )));
        }
        for v in roots.iter().chain(&coroots) {
            check_dim(rank, v.len())?;
        }
        let n = roots.len();
        let cartan = Matrix::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| coroots[i].dot(&roots[j])).collect())
                .collect(),
            n,
        );
        let qs: Vec<RatVec> = roots.iter().map(|r| r.to_rational()).collect();
        if rank_of(&qs, rank) != n {
            return Err(Error::InvalidRootDatum(
                "simple roots are linearly dependent".into(),
            ));
        }
        let cartan_type = classify_type(&cartan, false)?;
        Ok(RootDatum {
            rank,
            roots,
            coroots,
            cartan,
            cartan_type,
        })
    }

    /// Like [`RootDatum::new`], additionally checking a stated Cartan matrix.
    pub fn with_cartan(
        rank: usize,
        cartan: &IntMat,
        roots: Vec<IntVec>,
        coroots: Vec<IntVec>,
    ) -> Result<Self> {
        let rd = Self::new(rank, roots, coroots)?;
        if &rd.cartan != cartan {
            return Err(Error::InvalidRootDatum(
                "stated Cartan matrix differs from the pairing of coroots and roots".into(),
            ));
        }
        Ok(rd)
    }

    /// `X` is the weight lattice, with the fundamental weights as basis.
    pub fn simply_connected(cartan: &IntMat) -> Result<Self> {
        let n = cartan.rows();
        let roots = cartan.column_vectors();
        let coroots = (0..n).map(|i| Vector::unit(n, i)).collect();
        Self::with_cartan(n, cartan, roots, coroots)
    }

    /// `X` is the root lattice, with the simple roots as basis.
    pub fn adjoint(cartan: &IntMat) -> Result<Self> {
        let n = cartan.rows();
        let roots = (0..n).map(|i| Vector::unit(n, i)).collect();
        let coroots = cartan.row_vectors();
        Self::with_cartan(n, cartan, roots, coroots)
    }

    /// The product datum on `X_1 ⊕ X_2`.
    pub fn product(&self, other: &RootDatum) -> Result<Self> {
        let pad = |v: &IntVec, left: bool| -> IntVec {
            if left {
                v.concat(&Vector::zeros(other.rank))
            } else {
                Vector::zeros(self.rank).concat(v)
            }
        };
        let roots = self
            .roots
            .iter()
            .map(|r| pad(r, true))
            .chain(other.roots.iter().map(|r| pad(r, false)))
            .collect();
        let coroots = self
            .coroots
            .iter()
            .map(|r| pad(r, true))
            .chain(other.coroots.iter().map(|r| pad(r, false)))
            .collect();
        Self::new(self.rank + other.rank, roots, coroots)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn size(&self) -> usize {
        self.roots.len()
    }

    pub fn simple_roots(&self) -> &[IntVec] {
        &self.roots
    }

    pub fn simple_coroots(&self) -> &[IntVec] {
        &self.coroots
    }

    pub fn cartan(&self) -> &IntMat {
        &self.cartan
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn is_semisimple(&self) -> bool {
        self.size() == self.rank
    }

    /// `<coroot_i, v>` for every simple coroot.
    pub fn pairings(&self, v: &IntVec) -> Vec<Int> {
        self.coroots.iter().map(|c| c.dot(v)).collect()
    }

    pub fn is_dominant(&self, v: &IntVec) -> bool {
        self.coroots.iter().all(|c| !c.dot(v).is_negative())
    }

    /// Rational coefficients of `v` in the simple roots, if `v` lies in
    /// their span.
    pub fn root_coordinates(&self, v: &RatVec) -> Option<RatVec> {
        let qs: Vec<RatVec> = self.roots.iter().map(|r| r.to_rational()).collect();
        solve_combination(&qs, v)
    }

    /// `lambda <= mu`: the difference is a nonnegative integer combination of
    /// simple roots.
    pub fn dominance_leq(&self, lambda: &IntVec, mu: &IntVec) -> Result<bool> {
        check_dim(self.rank, lambda.len())?;
        check_dim(self.rank, mu.len())?;
        let diff = (mu - lambda).to_rational();
        Ok(match self.root_coordinates(&diff) {
            Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
            None => false,
        })
    }

    /// Matrix of `s_i`: `v - <coroot_i, v> root_i`.
    pub fn reflection(&self, i: usize) -> IntMat {
        let mut m = Matrix::identity(self.rank);
        for r in 0..self.rank {
            for c in 0..self.rank {
                let v = m.get(r, c) - &self.roots[i][r] * &self.coroots[i][c];
                m.set(r, c, v);
            }
        }
        m
    }

    /// The longest element of the parabolic subgroup generated by `J`,
    /// as a matrix on `X`.
    pub fn parabolic_longest(&self, subset: &[usize]) -> Result<IntMat> {
        let n = self.size();
        if let Some(&bad) = subset.iter().find(|&&j| j >= n) {
            return Err(Error::BadLabel(bad + 1));
        }
        // The Weyl group action on root coordinates: s_i(a_k) = a_k - a_ik a_i.
        let root_reflection = |i: usize| -> IntMat {
            let mut m = Matrix::identity(n);
            for k in 0..n {
                let v = m.get(i, k) - self.cartan.get(i, k);
                m.set(i, k, v);
            }
            m
        };
        let mut w_roots: IntMat = Matrix::identity(n);
        let mut w_x: IntMat = Matrix::identity(self.rank);
        loop {
            let lengthening = subset.iter().copied().find(|&j| {
                let col = w_roots.column(j);
                col.iter().all(|x| !x.is_negative())
            });
            let Some(j) = lengthening else { break };
            w_roots = w_roots.mul(&root_reflection(j));
            w_x = w_x.mul(&self.reflection(j));
        }
        Ok(w_x)
    }

    /// Fundamental weights in `X ⊗ Q`, taken inside the span of the roots.
    pub fn fundamental_weights(&self) -> Vec<RatVec> {
        let n = self.size();
        let inv = inverse(&self.cartan.to_rational()).expect("finite type Cartan matrix");
        (0..n)
            .map(|i| {
                (0..n).fold(Vector::zeros(self.rank), |acc: RatVec, k| {
                    acc.combine(&Rat::one(), &self.roots[k].to_rational(), inv.get(k, i))
                })
            })
            .collect()
    }
}

/// Classification of a Cartan matrix of finite type. With
/// `allow_rational_rescale`, each row is first scaled to have diagonal 2.
pub fn classify_type(cartan: &IntMat, allow_rational_rescale: bool) -> Result<CartanType> {
    if !cartan.is_square() {
        return Err(Error::NotFiniteType("matrix is not square".into()));
    }
    let n = cartan.rows();
    let two = Int::from(2);
    let mut a: IntMat = Matrix::zeros(n, n);
    for i in 0..n {
        let d = cartan.get(i, i);
        if allow_rational_rescale {
            if !d.is_positive() {
                return Err(Error::NotFiniteType(format!("diagonal entry {} is not positive", i + 1)));
            }
            for j in 0..n {
                let x = Rat::new(cartan.get(i, j) * &two, d.clone());
                if !x.is_integer() {
                    return Err(Error::NonCrystallographic { row: i + 1 });
                }
                a.set(i, j, x.to_integer());
            }
        } else {
            if *d != two {
                return Err(Error::NotFiniteType(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..n {
                a.set(i, j, cartan.get(i, j).clone());
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if a.get(i, j).is_positive() {
                return Err(Error::NotFiniteType("positive off-diagonal entry".into()));
            }
            if a.get(i, j).is_zero() != a.get(j, i).is_zero() {
                return Err(Error::NotFiniteType("zero pattern is not symmetric".into()));
            }
        }
    }
    let mut components = Vec::new();
    for comp in components_of(&a) {
        components.push(classify_connected(&a, &comp)?);
    }
    components.sort();
    Ok(CartanType(components))
}

/// Connected components of the Dynkin graph, each sorted.
pub(crate) fn components_of(a: &IntMat) -> Vec<Vec<usize>> {
    let n = a.rows();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            let new: Vec<usize> = (0..n)
                .filter(|&j| !seen[j] && j != i && !a.get(i, j).is_zero())
                .collect();
            for j in new {
                seen[j] = true;
                comp.push(j);
            }
            k += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn classify_connected(a: &IntMat, nodes: &[usize]) -> Result<(Family, usize)> {
    let n = nodes.len();
    let not_finite = |why: &str| Err(Error::NotFiniteType(why.to_string()));
    let mut edges: Vec<(usize, usize, Int)> = Vec::new();
    for (x, &i) in nodes.iter().enumerate() {
        for (y, &j) in nodes.iter().enumerate().skip(x + 1) {
            if !a.get(i, j).is_zero() {
                edges.push((x, y, a.get(i, j) * a.get(j, i)));
            }
        }
    }
    if edges.len() != n.saturating_sub(1) {
        return not_finite("Dynkin diagram has a cycle");
    }
    if edges.iter().any(|(_, _, b)| *b >= Int::from(4)) {
        return not_finite("bond of multiplicity four or more");
    }
    let mut degree = vec![0usize; n];
    for (x, y, _) in &edges {
        degree[*x] += 1;
        degree[*y] += 1;
    }
    let multiple: Vec<&(usize, usize, Int)> = edges.iter().filter(|e| !e.2.is_one()).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    match multiple.len() {
        0 => {
            if max_degree <= 2 {
                return Ok((Family::A, n));
            }
            let branches: Vec<usize> = (0..n).filter(|&x| degree[x] >= 3).collect();
            if branches.len() != 1 || max_degree != 3 {
                return not_finite("Dynkin diagram has too many branch points");
            }
            let centre = branches[0];
            let mut arms: Vec<usize> = neighbours(&edges, centre)
                .into_iter()
                .map(|start| arm_length(&edges, centre, start))
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Ok((Family::D, n)),
                [1, 2, 2] => Ok((Family::E, 6)),
                [1, 2, 3] => Ok((Family::E, 7)),
                [1, 2, 4] => Ok((Family::E, 8)),
                _ => not_finite("branched diagram of infinite type"),
            }
        }
        1 => {
            if max_degree > 2 {
                return not_finite("multiple bond in a branched diagram");
            }
            let (x, y, bond) = multiple[0];
            if *bond == Int::from(3) {
                return if n == 2 {
                    Ok((Family::G, 2))
                } else {
                    not_finite("triple bond in rank above two")
                };
            }
            if n == 2 {
                return Ok((Family::B, 2));
            }
            let leaf = if degree[*x] == 1 {
                Some((*x, *y))
            } else if degree[*y] == 1 {
                Some((*y, *x))
            } else {
                None
            };
            match leaf {
                Some((end, inner)) => {
                    if *a.get(nodes[end], nodes[inner]) == Int::from(-2) {
                        Ok((Family::B, n))
                    } else {
                        Ok((Family::C, n))
                    }
                }
                None if n == 4 => Ok((Family::F, 4)),
                None => not_finite("double bond inside a long chain"),
            }
        }
        _ => not_finite("more than one multiple bond"),
    }
}

fn neighbours(edges: &[(usize, usize, Int)], x: usize) -> Vec<usize> {
    edges
        .iter()
        .filter_map(|(a, b, _)| {
            if *a == x {
                Some(*b)
            } else if *b == x {
                Some(*a)
            } else {
                None
            }
        })
        .collect()
}

/// Number of nodes on the arm leaving `centre` through `start`.
fn arm_length(edges: &[(usize, usize, Int)], centre: usize, start: usize) -> usize {
    let mut prev = centre;
    let mut cur = start;
    let mut len = 1;
    loop {
        let next: Vec<usize> = neighbours(edges, cur).into_iter().filter(|&v| v != prev).collect();
        match next.as_slice() {
            [v] => {
                prev = cur;
                cur = *v;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Standard Cartan matrices, used by the catalog and tests.
pub fn cartan_matrix(family: Family, rank: usize) -> IntMat {
    let mut m: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for i in 0..rank {
        m.insert((i, i), 2);
    }
    let chain = |m: &mut BTreeMap<(usize, usize), i64>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            m.insert((i, i + 1), -1);
            m.insert((i + 1, i), -1);
        }
    };
    match family {
        Family::A => chain(&mut m, rank),
        Family::B => {
            chain(&mut m, rank);
            m.insert((rank - 1, rank - 2), -2);
        }
        Family::C => {
            chain(&mut m, rank);
            m.insert((rank - 2, rank - 1), -2);
        }
        Family::D => {
            chain(&mut m, rank - 1);
            m.insert((rank - 3, rank - 1), -1);
            m.insert((rank - 1, rank - 3), -1);
        }
        Family::E => {
            // Bourbaki labelling: 1-3-4-5-..., with 2 attached to 4.
            let edges = [(0, 2), (2, 3), (1, 3)]
                .into_iter()
                .chain((3..rank - 1).map(|i| (i, i + 1)));
            for (i, j) in edges {
                m.insert((i, j), -1);
                m.insert((j, i), -1);
            }
        }
        Family::F => {
            chain(&mut m, 4);
            m.insert((2, 1), -2);
        }
        Family::G => {
            m.insert((0, 1), -1);
            m.insert((1, 0), -3);
        }
    }
    Matrix::from_rows(
        (0..rank)
            .map(|i| (0..rank).map(|j| Int::from(*m.get(&(i, j)).unwrap_or(&0))).collect())
            .collect(),
        rank,
    )
}
