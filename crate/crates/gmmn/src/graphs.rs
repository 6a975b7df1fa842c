//! N-colored graphs as integral representations: type A and type D generation, the
//! verifier (commutation and Chebyshev vanishing) and joint spectra.

use crate::chebyshev::{DTable, MixedMat};
use crate::exactnum::{sum_all, CycQ, LaurentZ, MixedScalar};
use crate::fusion::{cyc_order, FusionRing, SlnModular};
use crate::koornwinder::KVariety;
use crate::nhedral::RepMatrix;
use crate::weights::{dominant_upto, Weight};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertices {a} and {b} are adjacent but both have color {color}")]
    ColorClash { a: usize, b: usize, color: usize },
    #[error("no type D adjacency satisfies the constraints for N={rank}, e={level}")]
    NoSolution { rank: usize, level: u32 },
    #[error("type D search space too large ({0} candidates)")]
    SearchTooLarge(u128),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NGraph {
    pub rank: usize,
    pub level: Option<u32>,
    pub colors: Vec<usize>,
    /// Optional per-vertex labels, kept in trailing comments of the file format.
    pub labels: Vec<String>,
    /// (a, b) with a < b -> multiplicity >= 1.
    pub edges: BTreeMap<(usize, usize), u32>,
}

impl NGraph {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Builds a graph from a symmetric adjacency matrix.
    pub fn from_adjacency(
        rank: usize,
        level: Option<u32>,
        colors: Vec<usize>,
        labels: Vec<String>,
        adj: &DMatrix<i128>,
    ) -> NGraph {
        let mut edges = BTreeMap::new();
        for a in 0..colors.len() {
            for b in a + 1..colors.len() {
                if adj[(a, b)] > 0 {
                    edges.insert((a, b), adj[(a, b)] as u32);
                }
            }
        }
        NGraph {
            rank,
            level,
            colors,
            labels,
            edges,
        }
    }

    pub fn adjacency(&self) -> DMatrix<i128> {
        let v = self.len();
        let mut a = DMatrix::zeros(v, v);
        for (&(x, y), &m) in &self.edges {
            a[(x, y)] = m as i128;
            a[(y, x)] = m as i128;
        }
        a
    }

    /// A(Gamma_i) for i = 1..N-1: the blocks from color c to color c+i.
    pub fn step_matrices(&self) -> Vec<DMatrix<i128>> {
        let adj = self.adjacency();
        let n = self.rank;
        (1..n)
            .map(|i| {
                DMatrix::from_fn(self.len(), self.len(), |u, w| {
                    if self.colors[w] == (self.colors[u] + i) % n {
                        adj[(u, w)]
                    } else {
                        0
                    }
                })
            })
            .collect()
    }

    pub fn check_colors(&self) -> Result<(), GraphError> {
        for &(a, b) in self.edges.keys() {
            if self.colors[a] == self.colors[b] {
                return Err(GraphError::ColorClash {
                    a,
                    b,
                    color: self.colors[a],
                });
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("nhedral-graph 1\n");
        let _ = writeln!(s, "rank {}", self.rank);
        if let Some(e) = self.level {
            let _ = writeln!(s, "level {e}");
        }
        let _ = writeln!(s, "vertices {}", self.len());
        for (i, c) in self.colors.iter().enumerate() {
            match self.labels.get(i).filter(|l| !l.is_empty()) {
                Some(l) => {
                    let _ = writeln!(s, "v {i} {c} # {l}");
                }
                None => {
                    let _ = writeln!(s, "v {i} {c}");
                }
            }
        }
        for (&(a, b), m) in &self.edges {
            let _ = writeln!(s, "e {a} {b} {m}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<NGraph, GraphError> {
        let perr = |line: usize, msg: &str| GraphError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut rank = None;
        let mut level = None;
        let mut count = None;
        let mut colors: Vec<Option<usize>> = Vec::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges = BTreeMap::new();
        let mut header = false;
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let (body, comment) = match raw.split_once('#') {
                Some((b, c)) => (b.trim(), c.trim()),
                None => (raw.trim(), ""),
            };
            if body.is_empty() {
                continue;
            }
            let f: Vec<&str> = body.split_whitespace().collect();
            if !header {
                if f != ["nhedral-graph", "1"] {
                    return Err(perr(line, "expected header `nhedral-graph 1`"));
                }
                header = true;
                continue;
            }
            let num = |s: &str| s.parse::<i64>().map_err(|_| perr(line, &format!("bad number `{s}`")));
            match (f[0], f.len()) {
                ("rank", 2) => {
                    let r = num(f[1])?;
                    if r < 2 {
                        return Err(perr(line, "rank must be at least 2"));
                    }
                    rank = Some(r as usize);
                }
                ("level", 2) => level = Some(num(f[1])? as u32),
                ("vertices", 2) => {
                    let v = num(f[1])?;
                    if v < 0 {
                        return Err(perr(line, "negative vertex count"));
                    }
                    count = Some(v as usize);
                    colors = vec![None; v as usize];
                    labels = vec![String::new(); v as usize];
                }
                ("v", 3) => {
                    let (Some(r), Some(v)) = (rank, count) else {
                        return Err(perr(line, "vertex before rank/vertices"));
                    };
                    let (i, c) = (num(f[1])?, num(f[2])?);
                    if i < 0 || i as usize >= v {
                        return Err(perr(line, "vertex index out of range"));
                    }
                    if c < 0 || c as usize >= r {
                        return Err(perr(line, "color out of range"));
                    }
                    if colors[i as usize].replace(c as usize).is_some() {
                        return Err(perr(line, "duplicate vertex"));
                    }
                    labels[i as usize] = comment.to_string();
                }
                ("e", 4) => {
                    let Some(v) = count else {
                        return Err(perr(line, "edge before vertices"));
                    };
                    let (a, b, m) = (num(f[1])?, num(f[2])?, num(f[3])?);
                    if a < 0 || b < 0 || a as usize >= v || b as usize >= v {
                        return Err(perr(line, "edge endpoint out of range"));
                    }
                    if a >= b {
                        return Err(perr(line, "edges must satisfy a < b"));
                    }
                    if m < 1 {
                        return Err(perr(line, "edge multiplicity must be at least 1"));
                    }
                    if edges.insert((a as usize, b as usize), m as u32).is_some() {
                        return Err(perr(line, "duplicate edge"));
                    }
                }
                _ => return Err(perr(line, &format!("unrecognized line `{body}`"))),
            }
        }
        let rank = rank.ok_or_else(|| perr(0, "missing rank"))?;
        if count.is_none() {
            return Err(perr(0, "missing vertices"));
        }
        let colors: Option<Vec<usize>> = colors.into_iter().collect();
        let colors = colors.ok_or_else(|| perr(0, "some vertex has no color line"))?;
        let g = NGraph {
            rank,
            level,
            colors,
            labels,
            edges,
        };
        g.check_colors()?;
        Ok(g)
    }
}

pub fn load_graph(path: &Path) -> Result<NGraph, GraphError> {
    NGraph::parse(&std::fs::read_to_string(path)?)
}

pub fn save_graph(g: &NGraph, path: &Path) -> Result<(), GraphError> {
    std::fs::write(path, g.to_text())?;
    Ok(())
}

/// Shipped graphs, by name.
pub fn builtin(name: &str) -> Option<NGraph> {
    let text = match name {
        "E4" => include_str!("../data/E4.graph"),
        "2A_c_4" => include_str!("../data/2A_c_4.graph"),
        "2A_c_4_half" | "2(A_c_4/2)" => include_str!("../data/2A_c_4_half.graph"),
        "D4_4_figure" => include_str!("../data/D4_4_figure.graph"),
        _ => return None,
    };
    Some(NGraph::parse(text).expect("shipped graph parses"))
}

pub const BUILTIN_NAMES: [&str; 4] = ["E4", "2A_c_4", "2A_c_4_half", "D4_4_figure"];

/// Edge multiplicity -> number of edges.
pub fn edge_multiset(g: &NGraph) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for &m in g.edges.values() {
        *out.entry(m).or_insert(0) += 1;
    }
    out
}

/// Color-preserving isomorphism a -> b, as a vertex map, by backtracking.
pub fn isomorphism(a: &NGraph, b: &NGraph) -> Option<Vec<usize>> {
    if a.rank != b.rank || a.len() != b.len() || edge_multiset(a) != edge_multiset(b) {
        return None;
    }
    let (aa, ba) = (a.adjacency(), b.adjacency());
    let v = a.len();
    let profile = |adj: &DMatrix<i128>, colors: &[usize], u: usize| {
        let mut p: Vec<(usize, i128)> = (0..v).filter(|&w| adj[(u, w)] != 0).map(|w| (colors[w], adj[(u, w)])).collect();
        p.sort();
        (colors[u], p)
    };
    let pa: Vec<_> = (0..v).map(|u| profile(&aa, &a.colors, u)).collect();
    let pb: Vec<_> = (0..v).map(|u| profile(&ba, &b.colors, u)).collect();
    fn rec(
        u: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        pa: &[(usize, Vec<(usize, i128)>)],
        pb: &[(usize, Vec<(usize, i128)>)],
        aa: &DMatrix<i128>,
        ba: &DMatrix<i128>,
    ) -> bool {
        if u == map.len() {
            return true;
        }
        for w in 0..map.len() {
            if used[w] || pa[u] != pb[w] || (0..u).any(|x| aa[(u, x)] != ba[(w, map[x])]) {
                continue;
            }
            map[u] = w;
            used[w] = true;
            if rec(u + 1, map, used, pa, pb, aa, ba) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    let mut map = vec![0; v];
    rec(0, &mut map, &mut vec![false; v], &pa, &pb, &aa, &ba).then_some(map)
}

/// Vertices X+(e) colored by the central character; Gamma_i is the fusion graph of L_{omega_i}.
pub fn gen_type_a(rank: usize, level: u32) -> NGraph {
    let fr = FusionRing::new(rank, level);
    // the color difference fixes i, so the sum over i is the adjacency matrix
    let len = fr.alcove.len();
    let adj = fr.fund.iter().fold(DMatrix::<i128>::zeros(len, len), |acc, f| acc + f);
    NGraph::from_adjacency(
        rank,
        Some(level),
        fr.alcove.members.iter().map(|m| m.color() as usize).collect(),
        fr.alcove.members.iter().map(|m| m.to_string()).collect(),
        &adj,
    )
}

#[derive(Clone, Debug)]
pub struct TypeD {
    pub graph: NGraph,
    /// gcd(N, e)
    pub g: usize,
    /// True when g = 1 and the graph is the type A graph.
    pub coincides_with_a: bool,
    /// Constraint solutions before and after identifying split-index relabelings.
    pub raw_solutions: usize,
    pub solutions: usize,
}

struct Orbit {
    members: Vec<usize>,
    split: usize,
    color: usize,
}

/// Nonnegative integer matrices with prescribed row and column sums.
fn contingency(rows: &[i128], cols: &[i128]) -> Vec<Vec<Vec<i128>>> {
    fn rec(r: usize, rows: &[i128], cols: &mut Vec<i128>, cur: &mut Vec<Vec<i128>>, out: &mut Vec<Vec<Vec<i128>>>) {
        if r == rows.len() {
            if cols.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut row = vec![0i128; cols.len()];
        fill(0, rows[r], r, rows, cols, &mut row, cur, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(
        c: usize,
        left: i128,
        r: usize,
        rows: &[i128],
        cols: &mut Vec<i128>,
        row: &mut Vec<i128>,
        cur: &mut Vec<Vec<i128>>,
        out: &mut Vec<Vec<Vec<i128>>>,
    ) {
        if c + 1 == cols.len() {
            if left <= cols[c] {
                row[c] = left;
                cols[c] -= left;
                cur.push(row.clone());
                rec(r + 1, rows, cols, cur, out);
                cur.pop();
                cols[c] += left;
            }
            return;
        }
        for x in 0..=left.min(cols[c]) {
            row[c] = x;
            cols[c] -= x;
            fill(c + 1, left - x, r, rows, cols, row, cur, out);
            cols[c] += x;
        }
        row[c] = 0;
    }
    if rows.iter().sum::<i128>() != cols.iter().sum::<i128>() {
        return Vec::new();
    }
    if cols.is_empty() {
        return if rows.iter().all(|&x| x == 0) { vec![vec![vec![]; rows.len()]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, rows, &mut cols.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    crate::exactnum::linalg::permute(&mut p, 0, false, &mut |q, _| out.push(q.to_vec()));
    out
}

/// Commutation and Chebyshev vanishing for the step matrices of a graph.
fn integral_ok(mats: &[DMatrix<i128>], table: &DTable, level: u32) -> bool {
    for a in mats {
        for b in mats {
            if a * b != b * a {
                return false;
            }
        }
    }
    let monos = table.monomials(mats);
    table
        .weights
        .iter()
        .filter(|m| m.sum() == level as i64 + 1)
        .all(|m| table.eval_with(m, &monos).iter().all(|&x| x == 0))
}

/// Type D graph from the algebra object L_0 + L_{e omega_p} + ..., g = gcd(N, e), p = N/g.
/// Split vertices come from orbits with nontrivial stabilizer; their mutual edges are
/// solved from the integrality constraints.
pub fn gen_type_d(rank: usize, level: u32) -> Result<TypeD, GraphError> {
    let g = crate::exactnum::nt::gcd(rank as u64, level as u64) as usize;
    if g <= 1 {
        return Ok(TypeD {
            graph: gen_type_a(rank, level),
            g,
            coincides_with_a: true,
            raw_solutions: 1,
            solutions: 1,
        });
    }
    let p = rank / g;
    let fr = FusionRing::new(rank, level);
    let alc = &fr.alcove;
    let step = |i: usize| (0..p).fold(i, |x, _| alc.rot[x]);
    let mut seen = vec![false; alc.len()];
    let mut orbits = Vec::new();
    for start in 0..alc.len() {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut x = step(start);
        while x != start {
            seen[x] = true;
            members.push(x);
            x = step(x);
        }
        orbits.push(Orbit {
            split: g / members.len(),
            color: alc.members[start].color() as usize,
            members,
        });
    }
    orbits.sort_by_key(|o| (o.split > 1, o.members[0]));
    // vertex ranges per orbit
    let mut first = Vec::new();
    let mut colors = Vec::new();
    let mut labels = Vec::new();
    for o in &orbits {
        first.push(colors.len());
        for a in 0..o.split {
            colors.push(o.color);
            let rep = &alc.members[o.members[0]];
            labels.push(if o.split > 1 { format!("{rep}#{a}") } else { rep.to_string() });
        }
    }
    let v = colors.len();
    // F_i(O -> O') = sum over m' in O' of N_{omega_i, rep(O)}^{m'}
    let flow = |i: usize, o: &Orbit, t: &Orbit| -> i128 {
        t.members.iter().map(|&m2| fr.fund[i - 1][(o.members[0], m2)]).sum()
    };
    let mut base = vec![DMatrix::<i128>::zeros(v, v); rank - 1];
    let mut unknown_pairs = Vec::new();
    for (oi, o) in orbits.iter().enumerate() {
        for (ti, t) in orbits.iter().enumerate() {
            let i = (t.color + rank - o.color) % rank;
            if i == 0 {
                continue;
            }
            if o.split > 1 && t.split > 1 {
                if oi < ti {
                    unknown_pairs.push((oi, ti, i));
                }
                continue;
            }
            // one side free: the free side's induced module is simple
            let val = if o.split == 1 { flow(i, o, t) } else { flow(rank - i, t, o) };
            for a in 0..o.split {
                for b in 0..t.split {
                    base[i - 1][(first[oi] + a, first[ti] + b)] = val;
                }
            }
        }
    }
    let choices: Vec<Vec<Vec<Vec<i128>>>> = unknown_pairs
        .iter()
        .map(|&(oi, ti, i)| {
            let (o, t) = (&orbits[oi], &orbits[ti]);
            let rows = vec![flow(rank - i, t, o); o.split];
            let cols = vec![flow(i, o, t); t.split];
            contingency(&rows, &cols)
        })
        .collect();
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    if total > 2_000_000 {
        return Err(GraphError::SearchTooLarge(total));
    }
    let table = DTable::new(rank, level + 1);
    let assemble = |pick: &[usize]| -> Vec<DMatrix<i128>> {
        let mut mats = base.clone();
        for (u, &(oi, ti, i)) in unknown_pairs.iter().enumerate() {
            let x = &choices[u][pick[u]];
            for (a, row) in x.iter().enumerate() {
                for (b, &val) in row.iter().enumerate() {
                    mats[i - 1][(first[oi] + a, first[ti] + b)] = val;
                    mats[rank - i - 1][(first[ti] + b, first[oi] + a)] = val;
                }
            }
        }
        mats
    };
    let split_orbits: Vec<usize> = (0..orbits.len()).filter(|&o| orbits[o].split > 1).collect();
    let relabelings: Vec<Vec<Vec<usize>>> =
        split_orbits.iter().map(|&o| permutations(orbits[o].split)).collect();
    let mut raw = 0usize;
    let mut classes: BTreeSet<Vec<i128>> = BTreeSet::new();
    let mut best: Option<(Vec<i128>, Vec<DMatrix<i128>>)> = None;
    let mut pick = vec![0usize; choices.len()];
    if choices.iter().all(|c| !c.is_empty()) {
        loop {
            let mats = assemble(&pick);
            if integral_ok(&mats, &table, level) {
                raw += 1;
                let canon = canonical_form(&mats, &orbits, &first, &split_orbits, &relabelings, v);
                if best.as_ref().is_none_or(|(b, _)| canon < *b) {
                    best = Some((canon.clone(), mats));
                }
                classes.insert(canon);
            }
            let mut k = 0;
            while k < pick.len() {
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == pick.len() {
                break;
            }
        }
    }
    let (_, mats) = best.ok_or(GraphError::NoSolution { rank, level })?;
    let adj = mats.iter().fold(DMatrix::<i128>::zeros(v, v), |acc, m| acc + m);
    Ok(TypeD {
        graph: NGraph::from_adjacency(rank, Some(level), colors, labels, &adj),
        g,
        coincides_with_a: false,
        raw_solutions: raw,
        solutions: classes.len(),
    })
}

fn canonical_form(
    mats: &[DMatrix<i128>],
    orbits: &[Orbit],
    first: &[usize],
    split_orbits: &[usize],
    relabelings: &[Vec<Vec<usize>>],
    v: usize,
) -> Vec<i128> {
    let mut best: Option<Vec<i128>> = None;
    let mut idx = vec![0usize; split_orbits.len()];
    loop {
        let mut perm: Vec<usize> = (0..v).collect();
        for (s, &o) in split_orbits.iter().enumerate() {
            for a in 0..orbits[o].split {
                perm[first[o] + a] = first[o] + relabelings[s][idx[s]][a];
            }
        }
        let key: Vec<i128> = mats
            .iter()
            .flat_map(|m| (0..v).flat_map(move |r| (0..v).map(move |c| (r, c))).map(|(r, c)| m[(perm[r], perm[c])]))
            .collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < relabelings[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    best.unwrap()
}

#[derive(Clone, Debug, Serialize)]
pub struct ChebyshevCheck {
    pub m: Weight,
    pub vanishes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumPoint {
    pub k: Weight,
    /// Numeric Z_1..Z_{N-1} as [re, im].
    pub z: Vec<[f64; 2]>,
    /// Exact multiplicity from the projector trace formula.
    pub multiplicity: i64,
    /// Multiplicity from numeric eigenvalues of a generic combination.
    pub numeric_multiplicity: usize,
    /// Largest distance of a matched eigenvalue to this point.
    pub distance: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub points: Vec<SpectrumPoint>,
    /// multiplicity -> number of points
    pub profile: BTreeMap<i64, usize>,
    pub total: i64,
    /// Every numeric eigenvalue lies within 1e-9 of the embedded variety.
    pub in_variety: bool,
    pub exact_matches_numeric: bool,
    /// Eigenvalues of A(Gamma_1), clustered, with multiplicities.
    pub first_coordinate: Vec<([f64; 2], usize)>,
}

impl Spectrum {
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .profile
            .iter()
            .map(|(m, c)| format!("{c} points with multiplicity {m}"))
            .collect();
        parts.join(" and ")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub rank: usize,
    pub level: u32,
    pub vertices: usize,
    pub colors_ok: bool,
    pub transpose_ok: bool,
    pub commutation_ok: bool,
    pub chebyshev: Vec<ChebyshevCheck>,
    pub chebyshev_ok: bool,
    pub spectrum: Option<Spectrum>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.colors_ok && self.transpose_ok && self.commutation_ok && self.chebyshev_ok
    }
}

/// Exact checks of the integrality conditions, then the joint spectrum when they hold.
pub fn verify(g: &NGraph, level: u32) -> VerifyReport {
    let n = g.rank;
    let colors_ok = g.check_colors().is_ok();
    let mats = g.step_matrices();
    let transpose_ok = (0..n - 1).all(|i| mats[i].transpose() == mats[n - 2 - i]);
    let commutation_ok = mats.iter().all(|a| mats.iter().all(|b| a * b == b * a));
    let mut chebyshev = Vec::new();
    let mut chebyshev_ok = false;
    if commutation_ok {
        let table = DTable::new(n, level + 1);
        let monos = table.monomials(&mats);
        for m in table.weights.iter().filter(|m| m.sum() == level as i64 + 1) {
            let vanishes = table.eval_with(m, &monos).iter().all(|&x| x == 0);
            chebyshev.push(ChebyshevCheck { m: m.clone(), vanishes });
        }
        chebyshev_ok = chebyshev.iter().all(|c| c.vanishes);
    }
    let spectrum = (colors_ok && transpose_ok && commutation_ok && chebyshev_ok)
        .then(|| joint_spectrum(&mats, n, level));
    VerifyReport {
        rank: n,
        level,
        vertices: g.len(),
        colors_ok,
        transpose_ok,
        commutation_ok,
        chebyshev,
        chebyshev_ok,
        spectrum,
    }
}

fn generic_coeffs(k: usize) -> Vec<Complex64> {
    (0..k)
        .map(|i| Complex64::from_polar(1.0 + 0.37 * i as f64, 0.61 + 1.13 * i as f64))
        .collect()
}

/// Joint spectrum of commuting normal step matrices whose U_m vanish for sum m = e+1.
/// The exact multiplicity of the point k is (S_0k / D) sum_m conj(S_mk) tr U_m(A).
pub fn joint_spectrum(mats: &[DMatrix<i128>], rank: usize, level: u32) -> Spectrum {
    let md = SlnModular::new(rank, level);
    let var = KVariety::new(rank, level).expect("Koornwinder points are distinct");
    let table = DTable::new(rank, level);
    let monos = table.monomials(mats);
    let traces: Vec<i128> = md
        .alcove
        .members
        .iter()
        .map(|m| table.eval_with(m, &monos).trace())
        .collect();
    let dinv = md.globaldim.inv().expect("nonzero global dimension");
    let len = md.len();
    let exact: Vec<i64> = (0..len)
        .map(|k| {
            let s = sum_all(
                md.n,
                (0..len).map(|m| md.s[m][k].conj().scale_int(&traces[m].into())),
            );
            let mult = &(&s * &md.s[0][k]) * &dinv;
            mult.as_integer()
                .and_then(|x| i64::try_from(x).ok())
                .expect("projector trace is an integer")
        })
        .collect();
    // numeric cross-check through a generic linear combination
    let c = generic_coeffs(rank - 1);
    let v = mats[0].nrows();
    let mut b = DMatrix::<Complex64>::zeros(v, v);
    for (ci, m) in c.iter().zip(mats) {
        b += m.map(|x| Complex64::new(x as f64, 0.0)) * *ci;
    }
    let images: Vec<Complex64> = var
        .points
        .iter()
        .map(|p| p.embed().iter().zip(&c).map(|(z, ci)| z * ci).sum())
        .collect();
    let eig = if v == 0 { Vec::new() } else { b.schur().eigenvalues().map(|e| e.iter().cloned().collect()).unwrap_or_default() };
    let mut numeric = vec![0usize; len];
    let mut dist = vec![0.0f64; len];
    let mut in_variety = eig.len() == v;
    for lam in &eig {
        let (best, d) = images
            .iter()
            .enumerate()
            .map(|(i, z)| (i, (lam - z).norm()))
            .fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
        numeric[best] += 1;
        dist[best] = dist[best].max(d);
        if d > 1e-9 {
            in_variety = false;
        }
    }
    let mut points = Vec::new();
    let mut profile = BTreeMap::new();
    for k in 0..len {
        if exact[k] == 0 && numeric[k] == 0 {
            continue;
        }
        *profile.entry(exact[k]).or_insert(0) += 1;
        points.push(SpectrumPoint {
            k: md.alcove.members[k].clone(),
            z: var.points[k].embed().iter().map(|z| [z.re, z.im]).collect(),
            multiplicity: exact[k],
            numeric_multiplicity: numeric[k],
            distance: dist[k],
        });
    }
    profile.remove(&0);
    let exact_matches_numeric = (0..len).all(|k| exact[k] == numeric[k] as i64);
    // eigenvalues of A(Gamma_1) are the first coordinates, clustered at 1e-9
    let mut clusters: Vec<([f64; 2], usize)> = Vec::new();
    for p in &points {
        let z = p.z[0];
        match clusters
            .iter_mut()
            .find(|(w, _)| (w[0] - z[0]).hypot(w[1] - z[1]) < 1e-9)
        {
            Some(cl) => cl.1 += p.multiplicity.max(0) as usize,
            None => clusters.push((z, p.multiplicity.max(0) as usize)),
        }
    }
    Spectrum {
        points,
        profile,
        total: exact.iter().sum(),
        in_variety,
        exact_matches_numeric,
        first_coordinate: clusters,
    }
}

/// theta_i acting on C^V: row block i is [N] id on the diagonal and the Z-blocks off it.
pub fn graph_rep(g: &NGraph, level: u32) -> RepMatrix {
    let n = cyc_order(g.rank, level);
    let adj = g.adjacency();
    let qn = MixedScalar::from_laurent(n, &LaurentZ::qnum(g.rank as i64));
    let v = g.len();
    let normalized = (0..g.rank)
        .map(|c| {
            let mut m = MixedMat::zeros(v, n);
            for u in (0..v).filter(|&u| g.colors[u] == c) {
                m.set(u, u, qn.clone());
                for w in 0..v {
                    if adj[(u, w)] != 0 {
                        m.set(u, w, MixedScalar::from_cyc(CycQ::from_int(n, adj[(u, w)] as i64)));
                    }
                }
            }
            m
        })
        .collect();
    RepMatrix {
        rank: g.rank,
        level,
        dim: v,
        normalized,
    }
}

/// Number of dominant weights with coordinate sum e+1 (the Chebyshev checks per graph).
pub fn chebyshev_check_count(rank: usize, level: u32) -> usize {
    dominant_upto(rank, level + 1)
        .iter()
        .filter(|m| m.sum() == level as i64 + 1)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_small() {
        let t = gen_type_a(4, 1);
        assert_eq!(t.colors, vec![0, 1, 2, 3]);
        assert_eq!(t.edges.len(), 6);
        assert!(t.edges.values().all(|&m| m == 1));
        for e in 0..6 {
            let p = gen_type_a(2, e);
            assert_eq!(p.len(), e as usize + 1);
            let want: BTreeMap<_, _> = (0..e as usize).map(|i| ((i, i + 1), 1)).collect();
            assert_eq!(p.edges, want);
        }
        for (n, e) in [(3, 4), (4, 3)] {
            assert_eq!(gen_type_a(n, e).len() as u64, crate::weights::alcove_size(n, e));
        }
    }

    #[test]
    fn type_a_verifies() {
        for (n, e) in [(2, 5), (3, 3), (4, 2), (4, 4)] {
            let r = verify(&gen_type_a(n, e), e);
            assert!(r.passes(), "N={n} e={e}");
            let s = r.spectrum.unwrap();
            assert!(s.in_variety && s.exact_matches_numeric);
            assert_eq!(s.profile, BTreeMap::from([(1, crate::weights::alcove_size(n, e) as usize)]));
        }
    }

    #[test]
    fn roundtrip_and_errors() {
        let g = gen_type_a(4, 4);
        assert_eq!(NGraph::parse(&g.to_text()).unwrap(), g);
        let bad = "nhedral-graph 1\nrank 3\nvertices 2\nv 0 0\nv 1 1\ne 0 1 -1\n";
        assert!(matches!(NGraph::parse(bad), Err(GraphError::Parse { line: 6, .. })));
        let clash = "nhedral-graph 1\nrank 3\nvertices 2\nv 0 1\nv 1 1\ne 0 1 1\n";
        assert!(matches!(NGraph::parse(clash), Err(GraphError::ColorClash { .. })));
        assert!(NGraph::parse("rank 3\n").is_err());
    }

    #[test]
    fn negative_controls() {
        // a colored path is not commutative
        let path = NGraph::parse("nhedral-graph 1\nrank 3\nvertices 3\nv 0 0\nv 1 1\nv 2 2\ne 0 1 1\ne 1 2 1\n").unwrap();
        let r = verify(&path, 1);
        assert!(!r.commutation_ok && !r.chebyshev_ok && r.spectrum.is_none());
        // a level-2 graph does not descend to level 1
        let r = verify(&gen_type_a(3, 2), 1);
        assert!(r.commutation_ok && !r.chebyshev_ok);
    }

    #[test]
    fn type_d() {
        let d = gen_type_d(4, 4).unwrap();
        assert_eq!(d.graph.len(), 14);
        assert_eq!(d.solutions, 1);
        assert_eq!(d.graph.edges.values().filter(|&&m| m == 3).count(), 1);
        let fig = builtin("D4_4_figure").unwrap();
        assert_eq!(edge_multiset(&fig), BTreeMap::from([(1, 39), (2, 3), (3, 1)]));
        assert!(isomorphism(&d.graph, &fig).is_some());
        assert!(isomorphism(&d.graph, &gen_type_a(4, 3)).is_none());
        let r = verify(&d.graph, 4);
        assert!(r.passes());
        let s = r.spectrum.unwrap();
        assert_eq!(s.profile, BTreeMap::from([(1, 8), (2, 3)]));
        for e in [2u32, 4, 6] {
            let d = gen_type_d(2, e).unwrap();
            assert_eq!(d.graph.len(), e as usize / 2 + 2);
        }
        assert!(gen_type_d(3, 2).unwrap().coincides_with_a);
    }

    #[test]
    fn shipped_graphs() {
        let e4 = builtin("E4").unwrap();
        assert_eq!(e4.len(), 12);
        assert_eq!(e4.edges.values().filter(|&&m| m == 2).count(), 5);
        let r = verify(&e4, 4);
        assert!(r.passes());
        assert_eq!(r.spectrum.unwrap().profile, BTreeMap::from([(1, 8), (4, 1)]));
        for name in ["2A_c_4", "2A_c_4_half"] {
            let r = verify(&builtin(name).unwrap(), 4);
            assert!(r.passes(), "{name}");
            assert_eq!(r.spectrum.unwrap().profile, BTreeMap::from([(1, 12), (2, 3)]), "{name}");
        }
    }

    #[test]
    fn graph_representations() {
        for g in [builtin("E4").unwrap(), gen_type_a(3, 2), gen_type_d(2, 4).unwrap().graph] {
            let e = g.level.unwrap();
            let rep = graph_rep(&g, e);
            rep.check_relations().unwrap();
            rep.kills_ideal(&DTable::new(g.rank, e + 1)).unwrap();
        }
    }
}
