//! Simple graphs: girth, regular and near-regular generators, high-girth
//! bipartite graphs, bipartite edge colouring, and node–edge incidence codes.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec, Mat};
use crate::rng::SplitMix64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Named node sets, e.g. layers of a layered construction.
    pub labels: BTreeMap<String, Vec<usize>>,
}

/// One colour per edge, indexed like [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl EdgeColoring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = BTreeSet::new();
        for (e, &(u, v)) in g.edges.iter().enumerate() {
            let c = self.colors[e];
            if c >= self.palette || !seen.insert((u, c)) || !seen.insert((v, c)) {
                return false;
            }
        }
        true
    }
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            let hi = u.max(v);
            if hi >= n {
                return Err(Error::IndexOutOfRange { index: hi, len: n });
            }
            if u == v {
                return Err(Error::InvalidParams(format!("self-loop at node {u}")));
            }
            if !seen.insert((u.min(v), hi)) {
                return Err(Error::InvalidParams(format!("parallel edge {u}-{v}")));
            }
        }
        Ok(Graph { n, edges, labels: BTreeMap::new() })
    }

    pub fn with_label(mut self, name: &str, nodes: Vec<usize>) -> Self {
        self.labels.insert(name.into(), nodes);
        self
    }

    pub fn node_count(&self) -> usize {
        self.n
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Neighbour lists carrying the edge index.
    pub fn incident_edges(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// A proper 2-colouring of the nodes, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency();
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("visited");
                for &v in &adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("all visited")).collect())
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// The nodes of a shortest cycle, in order.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let adj = self.adjacency();
        let mut best: Option<Vec<usize>> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best.as_ref().map_or(usize::MAX, |c| c.len()) {
                    break;
                }
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        if len < best.as_ref().map_or(usize::MAX, |c| c.len()) {
                            if let Some(cycle) = close_cycle(&parent, u, v) {
                                best = Some(cycle);
                            }
                        }
                    }
                }
            }
        }
        best
    }
}

// Joins the tree paths from u and v back to the root; succeeds only when the
// paths meet at the root alone, which yields a simple cycle.
fn close_cycle(parent: &[usize], u: usize, v: usize) -> Option<Vec<usize>> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path(u);
    let pv = path(v);
    let su: BTreeSet<usize> = pu.iter().copied().collect();
    if pv[..pv.len() - 1].iter().any(|x| su.contains(x)) {
        return None;
    }
    let mut cycle = pu;
    cycle.extend(pv[..pv.len() - 1].iter().rev());
    Some(cycle)
}

/// A simple graph with the given degree sequence, built by Havel–Hakimi
/// with ties broken towards the lower node index.
pub fn havel_hakimi(degrees: &[usize]) -> Result<Graph> {
    let n = degrees.len();
    let mut rem: Vec<usize> = degrees.to_vec();
    let mut edges = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&i| rem[i] > 0).collect();
        if order.is_empty() {
            break;
        }
        order.sort_by(|&a, &b| rem[b].cmp(&rem[a]).then(a.cmp(&b)));
        let u = order[0];
        let d = rem[u];
        if d > order.len() - 1 {
            return Err(Error::DegreeSequenceInfeasible);
        }
        rem[u] = 0;
        for &v in &order[1..=d] {
            rem[v] -= 1;
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges)
}

/// Graph on `⌈2k/r⌉` nodes with `k` edges, all degrees `r` except possibly
/// one node of degree `2k mod r`.
pub fn near_regular_graph(k: usize, r: usize) -> Result<Graph> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidParams("k and r must be positive".into()));
    }
    let (a, b) = (2 * k / r, 2 * k % r);
    let m = a + usize::from(b > 0);
    let feasible = if b == 0 { m > r } else { m >= r + 2 };
    if !feasible {
        return Err(Error::DegreeSequenceInfeasible);
    }
    let mut degrees = vec![r; a];
    if b > 0 {
        degrees.push(b);
    }
    havel_hakimi(&degrees)
}

/// Complete multipartite graph on `r + β` nodes with parts of size `β`.
pub fn turan_graph(r: usize, beta: usize) -> Result<Graph> {
    if beta == 0 || beta > r || r % beta != 0 {
        return Err(Error::InvalidBeta);
    }
    let b = r + beta;
    let mut edges = Vec::new();
    for u in 0..b {
        for v in u + 1..b {
            if u / beta != v / beta {
                edges.push((u, v));
            }
        }
    }
    Graph::new(b, edges)
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, edges).expect("simple by construction")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))).collect();
    Graph::new(a + b, edges).expect("simple by construction")
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams("a cycle needs at least 3 nodes".into()));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, edges).expect("simple by construction")
}

/// Hoffman–Singleton graph from five pentagons and five pentagrams.
pub fn hoffman_singleton() -> Result<Graph> {
    let p = |h: usize, j: usize| 5 * h + j;
    let q = |i: usize, j: usize| 25 + 5 * i + j;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, (j + 1) % 5)));
            edges.push((q(h, j), q(h, (j + 2) % 5)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, (h * i + j) % 5)));
            }
        }
    }
    let g = Graph::new(50, edges)?;
    validate(g, 50, 7, 5, "Hoffman-Singleton")
}

/// Cubic graph from LCF notation.
pub fn from_lcf(shifts: &[i64], repeats: usize) -> Result<Graph> {
    let n = shifts.len() * repeats;
    let mut set = BTreeSet::new();
    for i in 0..n {
        set.insert((i.min((i + 1) % n), i.max((i + 1) % n)));
        let j = (i as i64 + shifts[i % shifts.len()]).rem_euclid(n as i64) as usize;
        set.insert((i.min(j), i.max(j)));
    }
    Graph::new(n, set.into_iter().collect())
}

/// The Tutte 12-cage: 126 nodes, cubic, girth 12.
pub fn tutte_12_cage() -> Result<Graph> {
    let lcf = [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17];
    validate(from_lcf(&lcf, 7)?, 126, 3, 12, "Tutte 12-cage")
}

fn validate(g: Graph, nodes: usize, degree: usize, girth: usize, name: &str) -> Result<Graph> {
    if g.node_count() != nodes || g.regular_degree() != Some(degree) || g.girth() != Some(girth) {
        return Err(Error::ConstructionFailed(format!("{name} failed validation")));
    }
    Ok(g)
}

// Projective points of GF(q)^dim: nonzero vectors whose first nonzero
// coordinate is 1.
fn projective_points(f: &FieldSpec, dim: usize) -> Vec<Vec<Fe>> {
    let q = f.q() as usize;
    let mut out = Vec::new();
    let total = q.pow(dim as u32);
    for mut code in 1..total {
        let mut v = vec![Fe::ZERO; dim];
        for x in v.iter_mut().rev() {
            *x = Fe((code % q) as u32);
            code /= q;
        }
        if v.iter().find(|x| !x.is_zero()) == Some(&Fe::ONE) {
            out.push(v);
        }
    }
    out
}

fn normalize(f: &FieldSpec, v: &[Fe]) -> Vec<Fe> {
    let lead = *v.iter().find(|x| !x.is_zero()).expect("nonzero vector");
    let inv = f.inv(lead).expect("nonzero");
    v.iter().map(|&x| f.mul(x, inv)).collect()
}

fn dot(f: &FieldSpec, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Point–line incidence graph of PG(2, q): points first, then lines.
pub fn projective_plane_incidence(q: u64) -> Result<Graph> {
    let f = FieldSpec::of_order(q)?;
    let pts = projective_points(&f, 3);
    let np = pts.len();
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if dot(&f, p, l).is_zero() {
                edges.push((i, np + j));
            }
        }
    }
    Ok(Graph::new(2 * np, edges)?.with_label("points", (0..np).collect()).with_label("lines", (np..2 * np).collect()))
}

/// Incidence graph of the symplectic generalized quadrangle W(q): points of
/// PG(3, q) against lines that are totally isotropic for
/// `x0 y1 - x1 y0 + x2 y3 - x3 y2`.
pub fn quadrangle_incidence(q: u64) -> Result<Graph> {
    let f = FieldSpec::of_order(q)?;
    let pts = projective_points(&f, 4);
    let index: BTreeMap<Vec<Fe>, usize> = pts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let form = |a: &[Fe], b: &[Fe]| {
        let t1 = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
        let t2 = f.sub(f.mul(a[2], b[3]), f.mul(a[3], b[2]));
        f.add(t1, t2)
    };
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if !form(&pts[i], &pts[j]).is_zero() {
                continue;
            }
            let mut line = vec![i];
            for lam in f.elements() {
                let v: Vec<Fe> = pts[j].iter().zip(&pts[i]).map(|(&b, &a)| f.add(b, f.mul(lam, a))).collect();
                line.push(index[&normalize(&f, &v)]);
            }
            line.sort_unstable();
            line.dedup();
            lines.insert(line);
        }
    }
    let np = pts.len();
    let mut edges = Vec::new();
    for (l, line) in lines.iter().enumerate() {
        for &p in line {
            edges.push((p, np + l));
        }
    }
    let nl = lines.len();
    Ok(Graph::new(np + nl, edges)?.with_label("points", (0..np).collect()).with_label("lines", (np..np + nl).collect()))
}

/// An `(r+1)`-regular graph of girth `t+1` meeting the Moore bound, when one
/// is known and buildable here.
pub fn moore_catalog(r: u64, t: u64) -> Result<Graph> {
    let miss = Error::NotInCatalog { r, t };
    if r == 0 || t < 2 {
        return Err(miss);
    }
    let d = (r + 1) as usize;
    let g = if r == 1 {
        cycle_graph(t as usize + 1)?
    } else {
        match t {
            2 => complete_graph(d + 1),
            3 => complete_bipartite(d, d),
            4 if r == 2 => petersen(),
            4 if r == 6 => hoffman_singleton()?,
            5 if crate::field::prime_power(r).is_some() => projective_plane_incidence(r)?,
            7 if crate::field::prime_power(r).is_some() && r <= 7 => quadrangle_incidence(r)?,
            11 if r == 2 => tutte_12_cage()?,
            _ => return Err(miss),
        }
    };
    debug_assert_eq!(g.node_count() as u128, crate::bounds::moore_bound(r, t).expect("positive parameters"));
    Ok(g)
}

/// Where an auxiliary bipartite graph came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuxSource {
    CompleteBipartite,
    ProjectivePlane { q: u64 },
    Quadrangle { q: u64 },
    TutteCage,
    Random { seed: u64, attempts: u32 },
}

pub const RANDOM_GIRTH_ATTEMPTS: u32 = 200;

/// A `degree`-regular bipartite graph of girth at least `girth`.
///
/// Catalogue graphs are preferred; otherwise random superpositions of
/// `degree` perfect matchings are tried with growing side sizes.
pub fn bipartite_regular_girth(degree: usize, girth: usize, seed: u64) -> Result<(Graph, AuxSource)> {
    if degree < 2 || girth < 4 {
        return Err(Error::InvalidParams("degree >= 2 and girth >= 4 required".into()));
    }
    let g = girth + girth % 2;
    let pp = crate::field::prime_power(degree as u64 - 1).is_some();
    if g <= 4 {
        return Ok((complete_bipartite(degree, degree), AuxSource::CompleteBipartite));
    }
    if g <= 6 && pp {
        return Ok((
            projective_plane_incidence(degree as u64 - 1)?,
            AuxSource::ProjectivePlane { q: degree as u64 - 1 },
        ));
    }
    if g <= 8 && pp && degree <= 8 {
        return Ok((quadrangle_incidence(degree as u64 - 1)?, AuxSource::Quadrangle { q: degree as u64 - 1 }));
    }
    if g <= 12 && degree == 3 {
        return Ok((tutte_12_cage()?, AuxSource::TutteCage));
    }
    random_bipartite_girth(degree, g, seed)
}

/// Random superpositions of `degree` perfect matchings until one has girth
/// at least `girth`; the side size grows every ten failures.
pub fn random_bipartite_girth(degree: usize, girth: usize, seed: u64) -> Result<(Graph, AuxSource)> {
    let mut rng = SplitMix64::new(seed);
    let lower =
        crate::bounds::moore_bound(degree as u64 - 1, girth as u64 - 1).expect("positive parameters") as usize / 2;
    let mut side = lower.max(degree);
    let mut attempts = 0u32;
    while attempts < RANDOM_GIRTH_ATTEMPTS {
        for _ in 0..10 {
            attempts += 1;
            if let Some(g) = random_superposition(degree, side, &mut rng) {
                if g.girth().is_none_or(|x| x >= girth) {
                    return Ok((g, AuxSource::Random { seed, attempts }));
                }
            }
        }
        side = side * 5 / 4 + 1;
    }
    Err(Error::ConstructionFailed(format!(
        "no {degree}-regular bipartite graph of girth {girth} found in {RANDOM_GIRTH_ATTEMPTS} attempts"
    )))
}

fn random_superposition(degree: usize, side: usize, rng: &mut SplitMix64) -> Option<Graph> {
    let mut set = BTreeSet::new();
    for _ in 0..degree {
        // redraw the matching until it avoids the edges already placed
        let perm = (0..100).find_map(|_| {
            let mut perm: Vec<usize> = (0..side).collect();
            rng.shuffle(&mut perm);
            perm.iter().enumerate().all(|(u, &v)| !set.contains(&(u, side + v))).then_some(perm)
        })?;
        for (u, &v) in perm.iter().enumerate() {
            set.insert((u, side + v));
        }
    }
    let g = Graph::new(2 * side, set.into_iter().collect()).ok()?;
    Some(g.with_label("left", (0..side).collect()).with_label("right", (side..2 * side).collect()))
}

/// Splits a `d`-regular bipartite graph into `d` perfect matchings.
pub fn edge_color_bipartite(g: &Graph) -> Result<EdgeColoring> {
    let side = g.bipartition().ok_or(Error::NotBipartiteRegular)?;
    let d = g.regular_degree().ok_or(Error::NotBipartiteRegular)?;
    let left: Vec<usize> = (0..g.n).filter(|&u| !side[u]).collect();
    let right: Vec<usize> = (0..g.n).filter(|&u| side[u]).collect();
    if left.len() != right.len() {
        return Err(Error::NotBipartiteRegular);
    }
    let mut lpos = vec![usize::MAX; g.n];
    let mut rpos = vec![usize::MAX; g.n];
    for (i, &u) in left.iter().enumerate() {
        lpos[u] = i;
    }
    for (i, &u) in right.iter().enumerate() {
        rpos[u] = i;
    }
    // adjacency from left index to (right index, edge id)
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); left.len()];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        let (l, r) = if side[u] { (v, u) } else { (u, v) };
        adj[lpos[l]].push((rpos[r], e));
    }
    let mut colors = vec![usize::MAX; g.edges.len()];
    for c in 0..d {
        let matching = hopcroft_karp(&adj, right.len());
        for (l, slot) in matching.iter().enumerate() {
            let Some(e) = *slot else {
                return Err(Error::ConstructionFailed("regular bipartite graph without a perfect matching".into()));
            };
            colors[e] = c;
            adj[l].retain(|&(_, id)| id != e);
        }
    }
    Ok(EdgeColoring { colors, palette: d })
}

// Maximum matching; returns for every left node the matched edge id.
fn hopcroft_karp(adj: &[Vec<(usize, usize)>], nr: usize) -> Vec<Option<usize>> {
    let nl = adj.len();
    let mut match_l: Vec<Option<(usize, usize)>> = vec![None; nl];
    let mut match_r: Vec<Option<usize>> = vec![None; nr];
    let mut dist = vec![0usize; nl];
    loop {
        // layered BFS from free left nodes
        let mut queue = VecDeque::new();
        for l in 0..nl {
            if match_l[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &(r, _) in &adj[l] {
                match match_r[r] {
                    None => found = true,
                    Some(l2) if dist[l2] == usize::MAX => {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; nl];
        for l in 0..nl {
            if match_l[l].is_none() {
                augment(l, adj, &mut match_l, &mut match_r, &mut dist, &mut it);
            }
        }
    }
    match_l.into_iter().map(|m| m.map(|(_, e)| e)).collect()
}

fn augment(
    l: usize,
    adj: &[Vec<(usize, usize)>],
    match_l: &mut [Option<(usize, usize)>],
    match_r: &mut [Option<usize>],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    while it[l] < adj[l].len() {
        let (r, e) = adj[l][it[l]];
        it[l] += 1;
        let ok = match match_r[r] {
            None => true,
            Some(l2) => dist[l2] == dist[l] + 1 && augment(l2, adj, match_l, match_r, dist, it),
        };
        if ok {
            match_l[l] = Some((r, e));
            match_r[r] = Some(l);
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

/// Node–edge incidence matrix with all nonzero entries equal to 1.
pub fn incidence_matrix(g: &Graph, spec: &FieldSpec) -> Mat {
    let mut h = Mat::zeros(spec, g.n, g.edges.len());
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        h.set(u, e, Fe::ONE);
        h.set(v, e, Fe::ONE);
    }
    h
}

/// The code whose parity checks are the rows of the incidence matrix.
pub fn incidence_code(g: &Graph, spec: &FieldSpec) -> LinearCode {
    LinearCode::from_parity(incidence_matrix(g, spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Independent oracle: exhaustive simple-cycle search by DFS from each
    // start node, visiting only larger-indexed nodes.
    fn girth_by_cycle_enumeration(g: &Graph) -> Option<usize> {
        let adj = g.adjacency();
        let mut best = None::<usize>;
        fn dfs(adj: &[Vec<usize>], start: usize, u: usize, depth: usize, on: &mut Vec<bool>, best: &mut Option<usize>) {
            if best.is_some_and(|b| depth >= b) {
                return;
            }
            for &v in &adj[u] {
                if v == start && depth >= 3 {
                    *best = Some(best.map_or(depth, |b| b.min(depth)));
                } else if v > start && !on[v] {
                    on[v] = true;
                    dfs(adj, start, v, depth + 1, on, best);
                    on[v] = false;
                }
            }
        }
        for s in 0..g.node_count() {
            let mut on = vec![false; g.node_count()];
            on[s] = true;
            dfs(&adj, s, s, 1, &mut on, &mut best);
        }
        best
    }

    #[test]
    fn girths_of_named_graphs() {
        assert_eq!(complete_graph(4).girth(), Some(3));
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(girth_by_cycle_enumeration(&petersen()), Some(5));
        let heawood = projective_plane_incidence(2).unwrap();
        assert_eq!(heawood.node_count(), 14);
        assert_eq!(heawood.girth(), Some(6));
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), None);
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        let g = petersen();
        let c = g.shortest_cycle().unwrap();
        let adj = g.adjacency();
        assert_eq!(c.len(), 5);
        for i in 0..c.len() {
            assert!(adj[c[i]].contains(&c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn near_regular_examples() {
        let g = near_regular_graph(12, 4).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (6, 12));
        assert_eq!(g.regular_degree(), Some(4));
        let tri = near_regular_graph(3, 2).unwrap();
        assert_eq!(tri.girth(), Some(3));
        assert_eq!(tri.node_count(), 3);
        let seven = near_regular_graph(7, 2).unwrap();
        assert_eq!(seven.degrees(), vec![2; 7]);
        // 2k/r = 4 < r + 1
        assert_eq!(near_regular_graph(8, 4).unwrap_err(), Error::DegreeSequenceInfeasible);
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan_graph(2, 1).unwrap(), complete_graph(3));
        let t = turan_graph(6, 3).unwrap();
        assert_eq!((t.node_count(), t.edge_count()), (9, 27));
        let c4 = turan_graph(2, 2).unwrap();
        assert_eq!((c4.node_count(), c4.edge_count(), c4.girth()), (4, 4, Some(4)));
        assert_eq!(turan_graph(4, 3).unwrap_err(), Error::InvalidBeta);
    }

    #[test]
    fn catalog_bipartite_graphs() {
        let (k33, src) = bipartite_regular_girth(3, 4, 0).unwrap();
        assert_eq!(src, AuxSource::CompleteBipartite);
        assert_eq!(k33.edge_count(), 9);
        let (h, _) = bipartite_regular_girth(3, 6, 0).unwrap();
        assert_eq!((h.node_count(), h.girth()), (14, Some(6)));
        let (pg3, _) = bipartite_regular_girth(4, 6, 0).unwrap();
        assert_eq!((pg3.node_count(), pg3.girth(), pg3.regular_degree()), (26, Some(6), Some(4)));
        let (gq, _) = bipartite_regular_girth(3, 8, 0).unwrap();
        assert_eq!((gq.node_count(), gq.girth(), gq.regular_degree()), (30, Some(8), Some(3)));
    }

    #[test]
    fn random_fallback_certifies_girth() {
        let (g, src) = random_bipartite_girth(3, 6, 11).unwrap();
        assert!(matches!(src, AuxSource::Random { seed: 11, .. }));
        assert!(g.girth().unwrap() >= 6);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.bipartition().is_some());
    }

    #[test]
    fn colourings() {
        let c6 = cycle_graph(6).unwrap();
        let col = edge_color_bipartite(&c6).unwrap();
        assert_eq!(col.palette, 2);
        assert!(col.is_proper(&c6));
        let k33 = complete_bipartite(3, 3);
        assert!(edge_color_bipartite(&k33).unwrap().is_proper(&k33));
        let heawood = projective_plane_incidence(2).unwrap();
        let col = edge_color_bipartite(&heawood).unwrap();
        assert!(col.is_proper(&heawood));
        for c in 0..3 {
            assert_eq!(col.colors.iter().filter(|&&x| x == c).count(), 7);
        }
        assert_eq!(edge_color_bipartite(&petersen()).unwrap_err(), Error::NotBipartiteRegular);
    }

    #[test]
    fn moore_graphs() {
        for (r, t) in [(1, 2), (1, 5), (2, 2), (2, 3), (2, 4), (6, 4), (2, 5), (3, 5), (2, 7), (2, 11)] {
            let g = moore_catalog(r, t).unwrap();
            assert_eq!(
                g.node_count() as u128,
                crate::bounds::moore_bound(r, t).expect("positive parameters"),
                "r={r} t={t}"
            );
            assert_eq!(g.regular_degree(), Some(r as usize + 1));
            assert_eq!(g.girth(), Some(t as usize + 1));
        }
        assert_eq!(moore_catalog(56, 4).unwrap_err(), Error::NotInCatalog { r: 56, t: 4 });
        assert_eq!(moore_catalog(1, 5).unwrap(), cycle_graph(6).unwrap());
    }

    #[test]
    fn incidence_code_dimensions() {
        let f = FieldSpec::of_order(2).unwrap();
        let k4 = incidence_code(&complete_graph(4), &f);
        assert_eq!((k4.n(), k4.k()), (6, 3));
        let p = incidence_code(&petersen(), &f);
        assert_eq!((p.n(), p.k()), (15, 6));
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(incidence_code(&path, &f).k(), 0);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (3usize..10).prop_flat_map(|n| {
            proptest::collection::btree_set((0..n, 0..n), 0..20).prop_map(move |pairs| {
                let set: BTreeSet<(usize, usize)> =
                    pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
                Graph::new(n, set.into_iter().collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bfs_girth_matches_cycle_search(g in arb_graph()) {
            prop_assert_eq!(g.girth(), girth_by_cycle_enumeration(&g));
        }

        #[test]
        fn connected_incidence_code_has_cycle_space_dimension(g in arb_graph()) {
            prop_assume!(g.is_connected());
            let f = FieldSpec::of_order(2).unwrap();
            let c = incidence_code(&g, &f);
            prop_assert_eq!(c.k() + g.node_count(), g.edge_count() + 1);
        }
    }
}
