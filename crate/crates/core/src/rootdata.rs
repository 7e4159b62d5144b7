//! Root data for the simple types in Bourbaki conventions.
//!
//! Roots are stored in simple-root integer coordinates, coroots in
//! simple-coroot coordinates, so every pairing is an exact integer. Weights
//! live in the fundamental-weight basis (simply connected lattice). The Weyl
//! group is never materialized; orbits are enumerated by breadth-first search
//! on demand, optionally with coordinates reduced modulo an integer.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootDataError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("unrecognized Cartan type `{0}`")]
    Unrecognized(String),
    #[error("Weyl group of order {order} exceeds cap {cap}")]
    WeylGroupTooLarge { order: u128, cap: u128 },
    #[error("selected root set is not closed under addition: index {0} + index {1}")]
    NotClosed(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
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
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Cartan type, e.g. `B4` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(RootDataError::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootDataError::Unrecognized(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::Unrecognized(s.to_string()))?;
        CartanType::new(fam, rank)
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self.family {
            Family::A => fact(self.rank + 1),
            Family::B | Family::C => (1u128 << self.rank) * fact(self.rank),
            Family::D => (1u128 << (self.rank - 1)) * fact(self.rank),
            Family::G => 12,
            Family::F => 1152,
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Weyl-group element as a word in simple reflections.
///
/// The word need not be reduced; `det` is the parity of any expression, which
/// is well defined. `apply` composes right to left, so the last letter acts
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn det(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    pub fn then(&self, outer: &WeylElement) -> WeylElement {
        // outer ∘ self
        let mut word = outer.word.clone();
        word.extend_from_slice(&self.word);
        WeylElement { word }
    }
}

/// Root subsystem with its simple roots and Dynkin-type decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemDescriptor {
    /// Indices (into `positive_roots`) of the subsystem's simple roots.
    pub simple_indices: Vec<usize>,
    /// All selected positive-root indices.
    pub positive_indices: Vec<usize>,
    /// Twice the half-sum of the selected positive roots, in root coordinates.
    pub two_rho_sub: Vec<i64>,
    /// Connected components as (type, simple-root indices).
    pub components: Vec<(CartanType, Vec<usize>)>,
}

impl SubsystemDescriptor {
    /// Canonical rendering of the component multiset, e.g. `2A2+A1`.
    pub fn type_string(&self) -> String {
        type_string(self.components.iter().map(|(t, _)| *t))
    }

    pub fn type_multiset(&self) -> Vec<CartanType> {
        let mut v: Vec<CartanType> = self.components.iter().map(|(t, _)| *t).collect();
        sort_types(&mut v);
        v
    }
}

pub(crate) fn sort_types(v: &mut [CartanType]) {
    v.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
}

/// Render a multiset of simple types as `2A2+A1` (rank-descending).
pub fn type_string<I: IntoIterator<Item = CartanType>>(types: I) -> String {
    let mut v: Vec<CartanType> = types.into_iter().collect();
    if v.is_empty() {
        return "0".to_string();
    }
    sort_types(&mut v);
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        let count = j - i;
        if count == 1 {
            parts.push(format!("{}", v[i]));
        } else {
            parts.push(format!("{}{}", count, v[i]));
        }
        i = j;
    }
    parts.join("+")
}

/// Root datum of a simple type: positive roots and coroots with heights,
/// Cartan matrix, extended-diagram marks and symmetries.
#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan_type: CartanType,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    cartan: Vec<Vec<i64>>,
    /// Symmetrizers: `(α_i, α_i)/2` up to a global scale, so that
    /// `d[i]·cartan[i][j]` is symmetric.
    sym: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    heights: Vec<i64>,
    coheights: Vec<i64>,
    /// Squared length (scaled) per positive root.
    norms: Vec<i64>,
    /// Map root coordinates -> index into `positive_roots`.
    root_index: HashMap<Vec<i64>, usize>,
    /// `a_0..a_ℓ` with `a_0 = 1`.
    marks: Vec<i64>,
    extended_cartan: Vec<Vec<i64>>,
    omega_generators: Vec<Vec<usize>>,
    coxeter_number: i64,
    /// Sum of all positive coroots, in simple-coroot coordinates.
    two_rho_check: Vec<i64>,
    exponents: Vec<i64>,
}

fn cartan_and_sym(ct: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = ct.rank;
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    let chain = |edges: &[(usize, usize)], c: &mut Vec<Vec<i64>>| {
        for &(i, j) in edges {
            c[i][j] = -1;
            c[j][i] = -1;
        }
    };
    let mut sym = vec![1i64; n];
    match ct.family {
        Family::A => {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut c);
        }
        Family::B => {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut c);
            // α_n short: ⟨α_{n-1}, α_n^∨⟩ = -2
            c[n - 1][n - 2] = -2;
            sym = vec![2; n];
            sym[n - 1] = 1;
        }
        Family::C => {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut c);
            // α_n long: ⟨α_n, α_{n-1}^∨⟩ = -2
            c[n - 2][n - 1] = -2;
            sym = vec![1; n];
            sym[n - 1] = 2;
        }
        Family::D => {
            let edges: Vec<_> = (0..n.saturating_sub(2)).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut c);
            // prongs n-1, n at n-2 (1-based); 0-based: n-2 and n-1 at n-3
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            // for n = 3 the chain above already links 0-1; prongs are 1,2 at 0
            if n == 3 {
                // reset: D3 has edges (1,2)? No: prongs α2, α3 at α1.
                for row in c.iter_mut() {
                    for x in row.iter_mut() {
                        *x = 0;
                    }
                }
                for i in 0..3 {
                    c[i][i] = 2;
                }
                c[0][1] = -1;
                c[1][0] = -1;
                c[0][2] = -1;
                c[2][0] = -1;
            }
        }
        Family::E => {
            // Bourbaki: chain 1-3-4-5-6(-7(-8)), vertex 2 attached to 4.
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n == 8 {
                edges.push((6, 7));
            }
            chain(&edges, &mut c);
        }
        Family::F => {
            chain(&[(0, 1), (1, 2), (2, 3)], &mut c);
            c[2][1] = -2; // ⟨α_2, α_3^∨⟩ = -2 (α_2 long, α_3 short)
            sym = vec![2, 2, 1, 1];
        }
        Family::G => {
            // α_1 short, α_2 long.
            c[0][1] = -3;
            c[1][0] = -1;
            sym = vec![1, 3];
        }
    }
    (c, sym)
}

impl RootDatum {
    /// Build the root datum for a simple type.
    pub fn build(ct: CartanType) -> RootDatum {
        let (cartan, sym) = cartan_and_sym(ct);
        let n = ct.rank;

        // Generate positive roots by height induction using root strings.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            index.insert(v.clone(), roots.len());
            roots.push(v);
        }
        let pair_simple =
            |a: &[i64], i: usize| -> i64 { (0..n).map(|j| a[j] * cartan[i][j]).sum() };
        let mut frontier: Vec<Vec<i64>> = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for alpha in &frontier {
                for i in 0..n {
                    // q = max k with alpha - k·α_i a root (or k = 0)
                    let mut q = 0i64;
                    let mut down = alpha.clone();
                    loop {
                        down[i] -= 1;
                        let is_simple_neg = down.iter().all(|&x| x == 0);
                        if is_simple_neg || index.contains_key(&down) {
                            if is_simple_neg {
                                // alpha == α_i + ... reaching zero means alpha = (q+1)·α_i,
                                // only possible when alpha = α_i itself; string logic still
                                // wants q counted only over actual roots.
                                break;
                            }
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let p = q - pair_simple(alpha, i);
                    if p > 0 {
                        let mut up = alpha.clone();
                        up[i] += 1;
                        if !index.contains_key(&up) {
                            index.insert(up.clone(), usize::MAX); // placeholder
                            next.push(up);
                        }
                    }
                }
            }
            for v in &next {
                let slot = roots.len();
                index.insert(v.clone(), slot);
                roots.push(v.clone());
            }
            frontier = next;
        }

        // Sort by (height, coordinates) for determinism and reindex.
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        index.clear();
        for (k, r) in roots.iter().enumerate() {
            index.insert(r.clone(), k);
        }

        // Norms and coroots.
        let mut norms = Vec::with_capacity(roots.len());
        let mut coroots = Vec::with_capacity(roots.len());
        for r in &roots {
            // (α,α) = Σ_{ij} a_i a_j d_i C[i][j]
            let mut nn = 0i64;
            for i in 0..n {
                for j in 0..n {
                    nn += r[i] * r[j] * sym[i] * cartan[i][j];
                }
            }
            debug_assert!(nn > 0 && nn % 2 == 0);
            let d_alpha = nn / 2;
            let co: Vec<i64> = (0..n)
                .map(|i| {
                    let num = r[i] * sym[i];
                    debug_assert_eq!(num % d_alpha, 0);
                    num / d_alpha
                })
                .collect();
            norms.push(nn);
            coroots.push(co);
        }

        let heights: Vec<i64> = roots.iter().map(|r| r.iter().sum()).collect();
        let coheights: Vec<i64> = coroots.iter().map(|r| r.iter().sum()).collect();

        let highest = roots.last().expect("nonempty").clone();
        let mut marks = vec![1i64];
        marks.extend_from_slice(&highest);
        let coxeter_number = 1 + heights.last().unwrap();

        // Extended Cartan matrix with α_0 = -θ.
        let theta_co = coroots.last().unwrap().clone();
        let pair_root_coroot = |a: &[i64], c: &[i64]| -> i64 {
            let mut s = 0;
            for (jj, cj) in c.iter().enumerate() {
                for (ii, ai) in a.iter().enumerate() {
                    s += cj * cartan[jj][ii] * ai;
                }
            }
            s
        };
        let mut ext = vec![vec![0i64; n + 1]; n + 1];
        ext[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                ext[i + 1][j + 1] = cartan[i][j];
            }
            let mut simple = vec![0i64; n];
            simple[i] = 1;
            // ⟨α_0, α_i^∨⟩ = -⟨θ, α_i^∨⟩
            let mut co_i = vec![0i64; n];
            co_i[i] = 1;
            ext[i + 1][0] = -pair_root_coroot(&highest, &co_i);
            // ⟨α_i, α_0^∨⟩ = -⟨α_i, θ^∨⟩
            ext[0][i + 1] = -pair_root_coroot(&simple, &theta_co);
        }

        let omega_generators = omega_generators(ct);

        let mut two_rho_check = vec![0i64; n];
        for co in &coroots {
            for i in 0..n {
                two_rho_check[i] += co[i];
            }
        }

        // Exponents = conjugate partition of the height multiset.
        let h = coxeter_number;
        let mut count_ge = vec![0i64; (h + 1) as usize];
        for &ht in &heights {
            count_ge[ht as usize] += 1;
        }
        // count of roots with height >= k
        let mut exps = Vec::new();
        let mut acc = 0i64;
        let mut ge = vec![0i64; (h + 1) as usize];
        for k in (1..=(h - 1) as usize).rev() {
            acc += count_ge[k];
            ge[k] = acc;
        }
        // exponent m appears iff #(ht = k) drops; conjugate partition:
        // the multiset {e_1..e_n} has #{i: e_i >= k} = #roots of height k.
        let mut cnt = vec![0i64; (h + 1) as usize];
        for &ht in &heights {
            cnt[ht as usize] += 1;
        }
        for e in 1..=(h - 1) {
            let here = cnt[e as usize];
            let next = if e + 1 <= h - 1 {
                cnt[(e + 1) as usize]
            } else {
                0
            };
            for _ in 0..(here - next) {
                exps.push(e);
            }
        }
        exps.sort_unstable();

        RootDatum {
            cartan_type: ct,
            cartan,
            sym,
            positive_roots: roots,
            positive_coroots: coroots,
            heights,
            coheights,
            norms,
            root_index: index,
            marks,
            extended_cartan: ext,
            omega_generators,
            coxeter_number,
            two_rho_check,
            exponents: exps,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn coheights(&self) -> &[i64] {
        &self.coheights
    }

    pub fn norms(&self) -> &[i64] {
        &self.norms
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn extended_cartan(&self) -> &[Vec<i64>] {
        &self.extended_cartan
    }

    pub fn omega_generators(&self) -> &[Vec<usize>] {
        &self.omega_generators
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Sum of all positive coroots (= 2ρ^∨), simple-coroot coordinates.
    pub fn two_rho_check(&self) -> &[i64] {
        &self.two_rho_check
    }

    pub fn root_lookup(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// ⟨w, α^∨⟩ for a coroot given in simple-coroot coordinates.
    pub fn pair_weight_coroot(&self, w: &Weight, coroot: &[i64]) -> i64 {
        w.0.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    /// ⟨w, α^∨⟩ for the coroot of positive root `index`.
    pub fn pairing(&self, w: &Weight, coroot_index: usize) -> i64 {
        self.pair_weight_coroot(w, &self.positive_coroots[coroot_index])
    }

    /// ⟨w, 2ρ^∨⟩.
    pub fn pair_two_rho_check(&self, w: &Weight) -> i64 {
        self.pair_weight_coroot(w, &self.two_rho_check)
    }

    /// ⟨β, α^∨⟩ for a root β in simple-root coordinates and a coroot α^∨ in
    /// simple-coroot coordinates.
    pub fn pair_root_coroot(&self, root: &[i64], coroot: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for j in 0..n {
            if coroot[j] == 0 {
                continue;
            }
            let mut row = 0;
            for i in 0..n {
                row += self.cartan[j][i] * root[i];
            }
            s += coroot[j] * row;
        }
        s
    }

    /// Fundamental-weight coordinates of a vector given in root coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let n = self.rank();
        let mut v = vec![0i64; n];
        for (j, vj) in v.iter_mut().enumerate() {
            for i in 0..n {
                *vj += self.cartan[j][i] * root[i];
            }
        }
        Weight(v)
    }

    /// Simple reflection on a weight: s_i(w) = w - w_i · α_i.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let mut v = w.0.clone();
        let wi = w.0[i];
        for (j, vj) in v.iter_mut().enumerate() {
            *vj -= wi * self.cartan[j][i];
        }
        Weight(v)
    }

    /// Apply a Weyl element to a weight (rightmost letter first).
    pub fn apply(&self, elem: &WeylElement, w: &Weight) -> Weight {
        let mut cur = w.clone();
        for &i in elem.word.iter().rev() {
            cur = self.reflect(&cur, i);
        }
        cur
    }

    /// Reflection in an arbitrary positive root, as a word in simple
    /// reflections.
    pub fn root_reflection(&self, root_index: usize) -> WeylElement {
        let root = &self.positive_roots[root_index];
        if self.heights[root_index] == 1 {
            let i = root.iter().position(|&c| c == 1).unwrap();
            return WeylElement { word: vec![i] };
        }
        // Find simple i with ⟨root, α_i^∨⟩ > 0; s_i(root) is a lower root.
        let n = self.rank();
        for i in 0..n {
            let mut co = vec![0i64; n];
            co[i] = 1;
            let p = self.pair_root_coroot(root, &co);
            if p > 0 {
                let mut lower = root.clone();
                for (j, lj) in lower.iter_mut().enumerate() {
                    if j == i {
                        *lj -= p;
                    }
                }
                if let Some(k) = self.root_lookup(&lower) {
                    let inner = self.root_reflection(k);
                    let mut word = vec![i];
                    word.extend_from_slice(&inner.word);
                    word.push(i);
                    return WeylElement { word };
                }
            }
        }
        unreachable!("every non-simple positive root has a descent");
    }

    /// Orbit of `w` reduced mod `m` under the Weyl action, with one witness
    /// per orbit element. `m = 0` means no reduction (exact orbit).
    ///
    /// Errors with `WeylGroupTooLarge` when the Weyl group order exceeds
    /// `cap` (default 3·10⁶ when `None`).
    pub fn weyl_orbit_mod(
        &self,
        w: &Weight,
        m: i64,
        cap: Option<u128>,
    ) -> Result<OrbitMod, RootDataError> {
        self.orbit_bfs(w, m, cap, None)
    }

    /// Breadth-first witness search: the shortest word sending `w` to
    /// `target` mod `m`, or `None` when the orbits differ. Unlike
    /// `weyl_orbit_mod`, enumeration stops as soon as the target appears.
    pub fn witness_to_mod(
        &self,
        w: &Weight,
        target: &Weight,
        m: i64,
        cap: Option<u128>,
    ) -> Result<Option<WeylElement>, RootDataError> {
        let reduce = |v: &Weight| -> Vec<i64> {
            if m > 0 {
                v.0.iter().map(|x| x.rem_euclid(m)).collect()
            } else {
                v.0.clone()
            }
        };
        let goal = reduce(target);
        let orbit = self.orbit_bfs(w, m, cap, Some(&goal))?;
        Ok(orbit.position(&goal).map(|id| orbit.witness(id)))
    }

    fn orbit_bfs(
        &self,
        w: &Weight,
        m: i64,
        cap: Option<u128>,
        stop_at: Option<&[i64]>,
    ) -> Result<OrbitMod, RootDataError> {
        let cap = cap.unwrap_or(3_000_000);
        let order = self.cartan_type.weyl_order();
        if order > cap {
            return Err(RootDataError::WeylGroupTooLarge { order, cap });
        }
        let reduce = |v: &mut Vec<i64>| {
            if m > 0 {
                for x in v.iter_mut() {
                    *x = x.rem_euclid(m);
                }
            }
        };
        let mut start = w.0.clone();
        reduce(&mut start);
        let done = stop_at == Some(start.as_slice());
        let mut nodes: Vec<Vec<i64>> = vec![start.clone()];
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        seen.insert(start, 0);
        let mut queue = VecDeque::new();
        queue.push_back(0usize);
        if !done {
            'bfs: while let Some(at) = queue.pop_front() {
                for i in 0..self.rank() {
                    let mut next = self.reflect(&Weight(nodes[at].clone()), i).0;
                    reduce(&mut next);
                    if !seen.contains_key(&next) {
                        let id = nodes.len();
                        let hit = stop_at == Some(next.as_slice());
                        seen.insert(next.clone(), id);
                        nodes.push(next);
                        parent.push(Some((at, i)));
                        queue.push_back(id);
                        if hit {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        Ok(OrbitMod {
            nodes,
            parent,
            seen,
        })
    }

    /// Extract the subsystem formed by a set of positive-root indices.
    ///
    /// The set (with its negatives) must be stable under its own
    /// reflections; that holds for every congruence-defined selection,
    /// whether the divisibility condition is linear in the root or in the
    /// coroot. Simple roots are the selected roots not expressible as a sum
    /// of two selected roots; this is intrinsic to the subsystem.
    pub fn subsystem(&self, selected: &[usize]) -> Result<SubsystemDescriptor, RootDataError> {
        let sel: Vec<usize> = {
            let mut v = selected.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        // Reflection-closure check: s_γ(δ) ∈ ±sel for all selected γ, δ.
        let signed: std::collections::HashSet<Vec<i64>> = sel
            .iter()
            .flat_map(|&k| {
                let r = self.positive_roots[k].clone();
                let n: Vec<i64> = r.iter().map(|x| -x).collect();
                [r, n]
            })
            .collect();
        for &a in &sel {
            for &b in &sel {
                let pairing =
                    self.pair_root_coroot(&self.positive_roots[b], &self.positive_coroots[a]);
                let image: Vec<i64> = self.positive_roots[b]
                    .iter()
                    .zip(&self.positive_roots[a])
                    .map(|(x, y)| x - pairing * y)
                    .collect();
                if !signed.contains(&image) {
                    return Err(RootDataError::NotClosed(a, b));
                }
            }
        }
        let in_sel: std::collections::HashSet<usize> = sel.iter().copied().collect();
        // Indecomposables: not a sum of two selected positive roots.
        let mut simple = Vec::new();
        'outer: for &a in &sel {
            for &b in &sel {
                if b == a {
                    continue;
                }
                let diff: Vec<i64> = self.positive_roots[a]
                    .iter()
                    .zip(&self.positive_roots[b])
                    .map(|(x, y)| x - y)
                    .collect();
                if let Some(k) = self.root_lookup(&diff) {
                    if in_sel.contains(&k) {
                        continue 'outer;
                    }
                }
            }
            simple.push(a);
        }
        let mut two_rho_sub = vec![0i64; self.rank()];
        for &a in &sel {
            for i in 0..self.rank() {
                two_rho_sub[i] += self.positive_roots[a][i];
            }
        }
        let components = self.classify_components(&simple);
        Ok(SubsystemDescriptor {
            simple_indices: simple,
            positive_indices: sel,
            two_rho_sub,
            components,
        })
    }

    /// Split subsystem simple roots into connected components and classify
    /// each by its induced Cartan matrix and inherited root lengths.
    fn classify_components(&self, simple: &[usize]) -> Vec<(CartanType, Vec<usize>)> {
        let k = simple.len();
        let pair = |a: usize, b: usize| -> i64 {
            self.pair_root_coroot(
                &self.positive_roots[simple[a]],
                &self.positive_coroots[simple[b]],
            )
        };
        let mut seen = vec![false; k];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..k {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(at) = stack.pop() {
                for t in 0..k {
                    if !seen[t] && pair(at, t) != 0 {
                        seen[t] = true;
                        comp.push(t);
                        stack.push(t);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort();
        let mut out = Vec::new();
        for comp in comps {
            let ty = self.classify_one(&comp, simple, &pair);
            out.push((ty, comp.iter().map(|&s| simple[s]).collect()));
        }
        out
    }

    fn classify_one(
        &self,
        comp: &[usize],
        simple: &[usize],
        pair: &dyn Fn(usize, usize) -> i64,
    ) -> CartanType {
        let r = comp.len();
        let mk = |f: Family, rank: usize| CartanType { family: f, rank };
        if r == 1 {
            return mk(Family::A, 1);
        }
        // Edge multiplicities: |⟨a,b^∨⟩·⟨b,a^∨⟩|.
        let mut max_mult = 1i64;
        let mut degs = vec![0usize; r];
        let mut edges = Vec::new();
        for i in 0..r {
            for j in (i + 1)..r {
                let m = pair(comp[i], comp[j]) * pair(comp[j], comp[i]);
                if m != 0 {
                    degs[i] += 1;
                    degs[j] += 1;
                    edges.push((i, j, m));
                    max_mult = max_mult.max(m);
                }
            }
        }
        if max_mult == 3 {
            return mk(Family::G, 2);
        }
        if max_mult == 2 {
            // B/C/F by the count of long simple roots.
            let norms: Vec<i64> = comp.iter().map(|&s| self.norms[simple[s]]).collect();
            let long = *norms.iter().max().unwrap();
            let n_long = norms.iter().filter(|&&x| x == long).count();
            let n_short = r - n_long;
            if r == 4 && n_long == 2 && n_short == 2 && degs.iter().all(|&d| d <= 2) {
                // chain with interior double bond
                let (i, j, _) = *edges.iter().find(|&&(_, _, m)| m == 2).unwrap();
                if degs[i] == 2 && degs[j] == 2 {
                    return mk(Family::F, 4);
                }
            }
            if n_short == 1 {
                return mk(Family::B, r);
            }
            if n_long == 1 {
                // rank 2: B2 and C2 coincide; canonicalize to B2.
                if r == 2 {
                    return mk(Family::B, 2);
                }
                return mk(Family::C, r);
            }
            unreachable!("unclassifiable multiply-laced component");
        }
        // Simply laced: A (chain), D (one branch at the second node), E.
        let branch: Vec<usize> = (0..r).filter(|&i| degs[i] == 3).collect();
        if branch.is_empty() {
            return mk(Family::A, r);
        }
        assert_eq!(branch.len(), 1, "invalid simply-laced component");
        // Arm lengths from the branch node.
        let b = branch[0];
        let mut arms = Vec::new();
        let adj: Vec<Vec<usize>> = (0..r)
            .map(|i| {
                edges
                    .iter()
                    .filter_map(|&(x, y, _)| {
                        if x == i {
                            Some(y)
                        } else if y == i {
                            Some(x)
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        for &nb in &adj[b] {
            let mut len = 1;
            let mut prev = b;
            let mut at = nb;
            while let Some(&next) = adj[at].iter().find(|&&x| x != prev) {
                prev = at;
                at = next;
                len += 1;
            }
            arms.push(len);
        }
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => mk(Family::D, r),
            [1, 2, 2] => mk(Family::E, 6),
            [1, 2, 3] => mk(Family::E, 7),
            [1, 2, 4] => mk(Family::E, 8),
            _ => unreachable!("invalid simply-laced branch shape {arms:?}"),
        }
    }

    /// Dual datum: roots and coroots swapped. The Cartan matrix is
    /// transposed; vertex numbering follows the primal datum.
    pub fn dual(&self) -> RootDatum {
        let n = self.rank();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| self.cartan[j][i]).collect())
            .collect();
        let max_sym = *self.sym.iter().max().unwrap();
        let sym: Vec<i64> = self.sym.iter().map(|&d| max_sym / d).collect();
        let mut roots = self.positive_coroots.clone();
        let mut coroots = self.positive_roots.clone();
        // Dual lengths are inverse to primal ones; only ratios matter.
        let max_n = *self.norms.iter().max().unwrap();
        let min_n = *self.norms.iter().min().unwrap();
        let mut norms: Vec<i64> = self.norms.iter().map(|&x| max_n * min_n / x).collect();
        // Re-sort by dual height for the usual ordering invariants.
        let mut perm: Vec<usize> = (0..roots.len()).collect();
        perm.sort_by_key(|&k| (roots[k].iter().sum::<i64>(), roots[k].clone()));
        roots = perm.iter().map(|&k| roots[k].clone()).collect();
        coroots = perm.iter().map(|&k| coroots[k].clone()).collect();
        norms = perm.iter().map(|&k| norms[k]).collect();
        let heights: Vec<i64> = roots.iter().map(|r| r.iter().sum()).collect();
        let coheights: Vec<i64> = coroots.iter().map(|r| r.iter().sum()).collect();
        let mut root_index = HashMap::new();
        for (k, r) in roots.iter().enumerate() {
            root_index.insert(r.clone(), k);
        }
        let highest = roots.last().unwrap().clone();
        let mut marks = vec![1i64];
        marks.extend_from_slice(&highest);
        let coxeter_number = 1 + heights.last().unwrap();
        let mut two_rho_check = vec![0i64; n];
        for co in &coroots {
            for i in 0..n {
                two_rho_check[i] += co[i];
            }
        }
        let family = match self.cartan_type.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        let ct = CartanType { family, rank: n };
        let mut cnt = vec![0i64; (coxeter_number + 1) as usize];
        for &ht in &heights {
            cnt[ht as usize] += 1;
        }
        let mut exps = Vec::new();
        for e in 1..=(coxeter_number - 1) {
            let here = cnt[e as usize];
            let next = if e + 1 <= coxeter_number - 1 {
                cnt[(e + 1) as usize]
            } else {
                0
            };
            for _ in 0..(here - next) {
                exps.push(e);
            }
        }
        exps.sort_unstable();
        RootDatum {
            cartan_type: ct,
            cartan,
            sym,
            positive_roots: roots,
            positive_coroots: coroots,
            heights,
            coheights,
            norms,
            root_index,
            marks,
            extended_cartan: Vec::new(), // not used on dual data
            omega_generators: Vec::new(),
            coxeter_number,
            two_rho_check,
            exponents: exps,
        }
    }
}

/// Result of a (possibly mod-m) orbit enumeration.
#[derive(Debug)]
pub struct OrbitMod {
    nodes: Vec<Vec<i64>>,
    parent: Vec<Option<(usize, usize)>>,
    seen: HashMap<Vec<i64>, usize>,
}

impl OrbitMod {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.nodes
    }

    pub fn position(&self, v: &[i64]) -> Option<usize> {
        self.seen.get(v).copied()
    }

    /// Witness sending the orbit start to node `id`.
    pub fn witness(&self, id: usize) -> WeylElement {
        let mut word = Vec::new();
        let mut at = id;
        while let Some((p, i)) = self.parent[at] {
            word.push(i);
            at = p;
        }
        WeylElement { word }
    }
}

fn omega_generators(ct: CartanType) -> Vec<Vec<usize>> {
    let n = ct.rank;
    let ident: Vec<usize> = (0..=n).collect();
    match ct.family {
        Family::A => {
            if n == 1 {
                vec![vec![1, 0]]
            } else {
                // cycle 0-1-...-n-0; rotate by one
                let mut p = ident.clone();
                for (i, x) in p.iter_mut().enumerate() {
                    *x = (i + 1) % (n + 1);
                }
                vec![p]
            }
        }
        Family::B => {
            let mut p = ident.clone();
            p.swap(0, 1);
            vec![p]
        }
        Family::C => {
            let p: Vec<usize> = (0..=n).map(|i| n - i).collect();
            vec![p]
        }
        Family::D => {
            // extended vertices: prongs {0,1} at 2, prongs {n-1,n} at n-2
            let flip: Vec<usize> = (0..=n)
                .map(|i| match i {
                    0 => n,
                    1 => n - 1,
                    i if i == n => 0,
                    i if i == n - 1 => 1,
                    i => n - i,
                })
                .collect();
            if n % 2 == 0 {
                let mut eps = ident.clone();
                eps.swap(0, 1);
                eps.swap(n - 1, n);
                vec![eps, flip]
            } else {
                // order-4 generator: 0 -> n -> 1 -> n-1 -> 0, middle i -> n-i
                let sigma: Vec<usize> = (0..=n)
                    .map(|i| match i {
                        0 => n,
                        i if i == n => 1,
                        1 => n - 1,
                        i if i == n - 1 => 0,
                        i => n - i,
                    })
                    .collect();
                vec![sigma]
            }
        }
        Family::E if n == 6 => {
            // legs from 4: (3,1), (5,6), (2,0); rotate legs
            let mut p = ident.clone();
            p[1] = 6;
            p[6] = 0;
            p[0] = 1;
            p[3] = 5;
            p[5] = 2;
            p[2] = 3;
            vec![p]
        }
        Family::E if n == 7 => {
            // chain 0-1-3-4-5-6-7 with 2 at 4; flip
            let mut p = ident.clone();
            p[0] = 7;
            p[7] = 0;
            p[1] = 6;
            p[6] = 1;
            p[3] = 5;
            p[5] = 3;
            vec![p]
        }
        _ => vec![],
    }
}

/// Apply a vertex permutation to a Kac-style coordinate tuple.
pub fn apply_vertex_perm(perm: &[usize], s: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; s.len()];
    for (i, &v) in s.iter().enumerate() {
        out[perm[i]] = v;
    }
    out
}
