//! Sequential-recovery codes.
//!
//! Almost every code here is binary with a parity-check matrix that is the
//! node–edge incidence matrix of a graph: code symbols sit on edges, checks
//! on nodes. Over GF(2) a set of at most `t` erased edges can be peeled one
//! symbol at a time exactly when the graph has girth at least `t + 1`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bounds::seq_rate_bound;
use crate::code::{LinearCode, Role};
use crate::error::{Error, Result};
use crate::field::{Fe, FieldSpec, Mat};
use crate::graph::{
    bipartite_regular_girth, complete_graph, edge_color_bipartite, havel_hakimi, incidence_matrix, moore_catalog,
    near_regular_graph, random_bipartite_girth, turan_graph, AuxSource, EdgeColoring, Graph,
};

/// Largest `rows * cols` for which a dense parity-check matrix is built.
pub const DENSE_CELL_BUDGET: u128 = 1 << 24;

/// Block sizes of a layered parity-check matrix: `cols[i]` edges join layer
/// `i` to the layer above it, `rows[i]` nodes sit in layer `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseProfile {
    pub s: usize,
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
}

fn gf2() -> FieldSpec {
    FieldSpec::new(2, 1, None).expect("GF(2) is valid")
}

/// `H = [I_m | incidence]`: one parity symbol per node, one data symbol per edge.
fn node_parity_code(g: &Graph) -> LinearCode {
    let spec = gf2();
    let inc = incidence_matrix(g, &spec);
    let h = Mat::identity(&spec, g.node_count()).hstack(&inc).expect("same row count");
    LinearCode::from_parity(h)
}

/// Binary `(k + ⌈2k/r⌉, k, r, 2)` code on a near-regular graph.
pub fn t2_near_regular_code(k: usize, r: usize) -> Result<LinearCode> {
    let g = near_regular_graph(k, r)?;
    Ok(node_parity_code(&g).with_role(Role::SLr, Some(r), Some(2)))
}

/// Binary `((r+β)(r+2)/2, r(r+β)/2, r, 2)` code on the complete
/// multipartite graph with parts of size `β`.
pub fn t2_turan_code(r: usize, beta: usize) -> Result<LinearCode> {
    let g = turan_graph(r, beta)?;
    Ok(node_parity_code(&g).with_role(Role::SLr, Some(r), Some(2)))
}

/// `r = Σ_{i=2}^{l} C(m-1, i-1) + j` with `0 <= j < C(m-1, l)`.
fn decompose_r(m: usize, r: usize) -> Option<(usize, usize)> {
    let mut acc = 0usize;
    for l in 1..m {
        let next = crate::combi::binomial(m as u64 - 1, l as u64);
        let next = usize::try_from(next).ok()?;
        if r < acc + next {
            return Some((l, r - acc));
        }
        acc += next;
    }
    None
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Binary `t = 2` code of maximum dimension for `m` checks of weight `r+1`.
///
/// Columns are the identity, then every weight-`i` vector for `2 <= i <= l`,
/// then `j/(l+1)` full cyclic-shift classes of weight-`l+1` vectors.
pub fn t2_dim_optimal_code(m: usize, r: usize) -> Result<LinearCode> {
    if m < 2 || m > 24 || r == 0 {
        return Err(Error::InvalidParams(format!("need 2 <= m <= 24 and r >= 1, got m={m}, r={r}")));
    }
    let (l, j) = decompose_r(m, r).ok_or(Error::ParamDecompositionFails)?;
    if j > 0 && (j % (l + 1) != 0 || gcd(l + 1, m) != 1) {
        return Err(Error::ParamDecompositionFails);
    }
    let spec = gf2();
    let full = (1u32 << m) - 1;
    let mut cols: Vec<u32> = (0..m).map(|i| 1 << i).collect();
    for w in 2..=l {
        crate::combi::for_each_subset(m, w, |s| {
            cols.push(s.iter().fold(0, |a, &i| a | 1 << i));
            true
        });
    }
    if j > 0 {
        let rot = |x: u32| ((x << 1) | (x >> (m - 1))) & full;
        let mut seen = BTreeSet::new();
        let mut classes = 0;
        crate::combi::for_each_subset(m, l + 1, |s| {
            let rep = s.iter().fold(0u32, |a, &i| a | 1 << i);
            if seen.contains(&rep) {
                return true;
            }
            let mut x = rep;
            for _ in 0..m {
                seen.insert(x);
                cols.push(x);
                x = rot(x);
            }
            classes += 1;
            classes < j / (l + 1)
        });
    }
    let h = Mat::from_fn(&spec, m, cols.len(), |row, c| Fe(cols[c] >> row & 1));
    Ok(LinearCode::from_parity(h).with_role(Role::SLr, Some(r), Some(2)))
}

/// The two small `t = 3` codes kept as fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T3Example {
    /// `(10, 5, 3, 3)`.
    Ex1,
    /// `(14, 8, 4, 3)`, the shortest possible for its `k` and `r`.
    Ex2,
}

pub fn t3_catalog(which: T3Example) -> LinearCode {
    let (rows, r): (&[&str], usize) = match which {
        T3Example::Ex1 => (&["1000100011", "0100010010", "0010001011", "0001000101", "0000111100"], 3),
        T3Example::Ex2 => (
            &[
                "10000011110000",
                "01000000001111",
                "00100011001100",
                "00010000110011",
                "00001010101010",
                "00000101010101",
            ],
            4,
        ),
    };
    let h = Mat::from_bits(&gf2(), rows).expect("fixture is well formed");
    LinearCode::from_parity(h).with_role(Role::SLr, Some(r), Some(3))
}

/// Incidence code of a Moore graph of degree `r+1` and girth `t+1`.
pub fn moore_code(r: u64, t: u64) -> Result<LinearCode> {
    let g = moore_catalog(r, t)?;
    Ok(graph_code(&g, r, t))
}

fn graph_code(g: &Graph, r: u64, t: u64) -> LinearCode {
    LinearCode::from_parity(incidence_matrix(g, &gf2())).with_role(Role::SLr, Some(r as usize), Some(t as usize))
}

/// How the auxiliary graph of the expansion is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxChoice {
    /// Smallest catalogued graph, falling back to a seeded random one.
    Catalog { seed: u64 },
    /// Always the seeded random superposition of matchings.
    Random { seed: u64 },
}

impl Default for AuxChoice {
    fn default() -> Self {
        AuxChoice::Catalog { seed: 1 }
    }
}

/// Everything built on the way to a rate-optimal graph.
#[derive(Clone, Debug)]
pub struct SeqGraph {
    pub r: u64,
    pub t: u64,
    /// The final graph. Node 0 is the apex joined to every layer-0 node.
    pub graph: Graph,
    /// Layer of each node of `graph`, the apex excluded.
    pub layer: Vec<usize>,
    pub base: Graph,
    pub base_coloring: Option<EdgeColoring>,
    /// `None` when the base graph already had the required girth.
    pub aux: Option<(AuxSource, usize)>,
    pub girth: Option<usize>,
    pub profile: StaircaseProfile,
}

/// A rate-optimal code and the graph it came from.
#[derive(Clone, Debug)]
pub struct SeqCode {
    pub code: LinearCode,
    pub provenance: SeqGraph,
}

/// Layered base graph: nodes are numbered layer by layer from layer 0.
struct Base {
    graph: Graph,
    layer: Vec<usize>,
    coloring: EdgeColoring,
    a0: usize,
}

fn tree_edges(a0: usize, r: usize, depth: usize, offsets: &[usize], edges: &mut Vec<(usize, usize)>) {
    for i in 1..=depth {
        let width = a0 * r.pow(i as u32 - 1);
        for p in 0..width {
            for c in 0..r {
                edges.push((offsets[i - 1] + p, offsets[i] + p * r + c));
            }
        }
    }
}

fn layer_offsets(sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0];
    for &s in sizes {
        out.push(out.last().unwrap() + s);
    }
    out
}

/// Odd `t = 2s+1`: a tree of depth `s-1` below `r+1` roots, then a
/// biregular layer between `V_{s-1}` (degree `r`) and `V_s` (degree `r+1`).
fn base_odd(r: usize, s: usize) -> Result<Base> {
    let a0 = r + 1;
    let mut sizes: Vec<usize> = (0..s).map(|i| a0 * r.pow(i as u32)).collect();
    sizes.push(r.pow(s as u32));
    let off = layer_offsets(&sizes);
    let mut edges = Vec::new();
    tree_edges(a0, r, s - 1, &off, &mut edges);
    let last = sizes[s];
    for u in 0..sizes[s - 1] {
        for c in 0..r {
            edges.push((off[s - 1] + u, off[s] + (u * r + c) % last));
        }
    }
    // The apex makes the graph (r+1)-regular and bipartite between odd and
    // even layers, so a proper (r+1)-colouring exists.
    let n = off[s + 1];
    let mut with_apex = edges.clone();
    with_apex.extend((0..a0).map(|v| (v, n)));
    let g0 = Graph::new(n + 1, with_apex)?;
    let col = edge_color_bipartite(&g0)?;
    let colors = col.colors[..edges.len()].to_vec();
    let layer = (0..=s).flat_map(|i| vec![i; sizes[i]]).collect();
    Ok(Base { graph: Graph::new(n, edges)?, layer, coloring: EdgeColoring { colors, palette: r + 1 }, a0 })
}

/// Even `t = 2s+2`, `s >= 2`: four trees of depth `s`, leaves grouped by the
/// colour of their parent edge and joined by an `r`-regular bipartite graph
/// coloured with the remaining `r` colours.
fn base_even(r: usize, s: usize) -> Result<Base> {
    let a0 = 4;
    let sizes: Vec<usize> = (0..=s).map(|i| a0 * r.pow(i as u32)).collect();
    let off = layer_offsets(&sizes);
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    let mut parent_color = vec![usize::MAX; off[s + 1]];
    for i in 1..=s {
        for p in 0..sizes[i - 1] {
            let u = off[i - 1] + p;
            let palette: Vec<usize> = (0..=r).filter(|&c| c != parent_color[u]).take(r).collect();
            for (c, &col) in palette.iter().enumerate() {
                let v = off[i] + p * r + c;
                edges.push((u, v));
                colors.push(col);
                parent_color[v] = col;
            }
        }
    }
    for j in 0..=r {
        let group: Vec<usize> = (off[s]..off[s + 1]).filter(|&v| parent_color[v] == j).collect();
        let half = group.len() / 2;
        if half <= r {
            return Err(Error::ConstructionFailed(format!(
                "leaf class of size {} too small for degree {r}",
                group.len()
            )));
        }
        // bipartite double of an r-regular graph on `half` nodes
        let reg = havel_hakimi(&vec![r; half])?;
        let local: Vec<(usize, usize)> =
            reg.edges().iter().flat_map(|&(a, b)| [(a, half + b), (b, half + a)]).collect();
        let lg = Graph::new(2 * half, local)?;
        let lc = edge_color_bipartite(&lg)?;
        let palette: Vec<usize> = (0..=r).filter(|&c| c != j).collect();
        for (e, &(a, b)) in lg.edges().iter().enumerate() {
            edges.push((group[a], group[b]));
            colors.push(palette[lc.colors[e]]);
        }
    }
    let layer = (0..=s).flat_map(|i| vec![i; sizes[i]]).collect();
    Ok(Base { graph: Graph::new(off[s + 1], edges)?, layer, coloring: EdgeColoring { colors, palette: r + 1 }, a0 })
}

fn with_apex(base: &Graph, a0: usize) -> Result<Graph> {
    let shift = |v: usize| v + 1;
    let mut edges: Vec<(usize, usize)> = (0..a0).map(|v| (0, shift(v))).collect();
    edges.extend(base.edges().iter().map(|&(a, b)| (shift(a), shift(b))));
    Graph::new(base.node_count() + 1, edges)
}

/// Replaces each base node by a copy of the auxiliary node set; an edge of
/// colour `i` becomes two edges per colour-`i` auxiliary edge.
fn expand(base: &Base, aux: &Graph, aux_col: &EdgeColoring) -> Result<Graph> {
    let na = aux.node_count();
    let node = |v: usize, u: usize| 1 + v * na + u;
    let mut by_color: Vec<Vec<(usize, usize)>> = vec![Vec::new(); aux_col.palette];
    for (e, &uw) in aux.edges().iter().enumerate() {
        by_color[aux_col.colors[e]].push(uw);
    }
    let mut edges: Vec<(usize, usize)> = (0..base.a0).flat_map(|v| (0..na).map(move |u| (0, node(v, u)))).collect();
    for (e, &(v, x)) in base.graph.edges().iter().enumerate() {
        for &(u, w) in &by_color[base.coloring.colors[e]] {
            edges.push((node(v, u), node(x, w)));
            edges.push((node(v, w), node(x, u)));
        }
    }
    Graph::new(1 + base.graph.node_count() * na, edges)
}

/// Orders edges layer by layer so the incidence matrix is a staircase, and
/// records the block sizes.
fn staircase(g: Graph, layer: &[usize], s: usize) -> Result<(Graph, StaircaseProfile)> {
    // apex is layer 0 here, everything else shifted by one
    let lay = |v: usize| if v == 0 { 0 } else { layer[v - 1] + 1 };
    let key = |&(a, b): &(usize, usize)| {
        let (la, lb) = (lay(a), lay(b));
        let block = if la == lb { la + 1 } else { la.max(lb) };
        (block, a.max(b), a.min(b))
    };
    let mut edges = g.edges().to_vec();
    edges.sort_by_key(key);
    let blocks = edges.iter().map(|e| key(e).0).max().unwrap_or(0);
    let mut cols = vec![0; blocks];
    for e in &edges {
        cols[key(e).0 - 1] += 1;
    }
    let mut rows = vec![0; s + 1];
    for &l in layer {
        rows[l] += 1;
    }
    let labels = g.labels.clone();
    let mut out = Graph::new(g.node_count(), edges)?;
    out.labels = labels;
    Ok((out, StaircaseProfile { s, cols, rows }))
}

/// The girth-`t+1` graph behind [`seq_general_code`], without the dense matrix.
pub fn seq_general_graph(r: u64, t: u64, aux: AuxChoice) -> Result<SeqGraph> {
    if t < 3 || t == 4 {
        return Err(Error::UnsupportedT(t));
    }
    let ru = r as usize;
    let s = ((t - 1) / 2) as usize;
    let base = if t % 2 == 1 {
        if r < 2 {
            return Err(Error::InvalidParams("r >= 2 required".into()));
        }
        base_odd(ru, s)?
    } else {
        if r < 3 {
            return Err(Error::InvalidParams("r >= 3 required for even t".into()));
        }
        base_even(ru, s)?
    };
    let need = t as usize + 1;
    let g0 = with_apex(&base.graph, base.a0)?;
    let (graph, layer, aux_used) = if g0.girth().is_none_or(|x| x >= need) {
        (g0, base.layer.clone(), None)
    } else {
        let (ag, src) = match aux {
            AuxChoice::Catalog { seed } => bipartite_regular_girth(ru + 1, need, seed),
            AuxChoice::Random { seed } => random_bipartite_girth(ru + 1, need + need % 2, seed),
        }
        .map_err(|_| Error::AuxiliaryUnavailable { degree: r + 1, girth: t + 1 })?;
        let ac = edge_color_bipartite(&ag)?;
        let na = ag.node_count();
        let layer: Vec<usize> = base.layer.iter().flat_map(|&l| vec![l; na]).collect();
        (expand(&base, &ag, &ac)?, layer, Some((src, na)))
    };
    let girth = graph.girth();
    if girth.is_some_and(|x| x < need) {
        return Err(Error::ConstructionFailed(format!("expanded graph has girth {girth:?} < {need}")));
    }
    let (graph, profile) = staircase(graph, &layer, s)?;
    Ok(SeqGraph {
        r,
        t,
        graph,
        layer,
        base: base.graph,
        base_coloring: Some(base.coloring),
        aux: aux_used,
        girth,
        profile,
    })
}

/// Binary rate-optimal code for sequential recovery of `t` erasures with
/// locality `r`.
///
/// `t = 2` uses the complete graph on `r+2` nodes and `t = 4` is served only
/// by Moore graphs. Other `t >= 3` go through the layered base graph and,
/// when its girth is too small, its expansion by an auxiliary graph. The
/// apex row is dropped from `H` since it is the sum of the others.
pub fn seq_general_code(r: u64, t: u64, aux: AuxChoice) -> Result<SeqCode> {
    if r == 0 {
        return Err(Error::InvalidParams("r must be positive".into()));
    }
    let prov = match t {
        2 => {
            let g = complete_graph(r as usize + 2);
            let n = g.node_count();
            let girth = g.girth();
            let profile = StaircaseProfile { s: 0, cols: vec![g.edge_count()], rows: vec![n] };
            SeqGraph {
                r,
                t,
                graph: g.clone(),
                layer: vec![0; n],
                base: g,
                base_coloring: None,
                aux: None,
                girth,
                profile,
            }
        }
        4 => {
            let g = moore_catalog(r, 4).map_err(|_| Error::UnsupportedT(4))?;
            let n = g.node_count();
            let girth = g.girth();
            let profile = StaircaseProfile { s: 1, cols: vec![g.edge_count()], rows: vec![n] };
            SeqGraph {
                r,
                t,
                graph: g.clone(),
                layer: vec![0; n],
                base: g,
                base_coloring: None,
                aux: None,
                girth,
                profile,
            }
        }
        _ => seq_general_graph(r, t, aux)?,
    };
    let g = &prov.graph;
    let apex = t != 2 && t != 4;
    let rows = g.node_count() - usize::from(apex);
    let cells = rows as u128 * g.edge_count() as u128;
    if cells > DENSE_CELL_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "dense parity-check matrix",
            needed: cells,
            budget: DENSE_CELL_BUDGET,
        });
    }
    let full = incidence_matrix(g, &gf2());
    let h = if apex { full.select_rows(&(1..g.node_count()).collect::<Vec<_>>())? } else { full };
    let code = LinearCode::from_parity(h).with_role(Role::SLr, Some(r as usize), Some(t as usize));
    let rate = BigRational::new(BigInt::from(code.k()), BigInt::from(code.n()));
    if rate != seq_rate_bound(r, t)? {
        return Err(Error::ConstructionFailed(format!("rate {}/{} misses the bound", code.k(), code.n())));
    }
    Ok(SeqCode { code, provenance: prov })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rate(c: &LinearCode) -> BigRational {
        BigRational::new(BigInt::from(c.k()), BigInt::from(c.n()))
    }

    // Oracle: peel erasures using checks with exactly one erased position,
    // trying every t-subset.
    fn peels_all(c: &LinearCode, t: usize) -> bool {
        let h = c.parity_check();
        let supp: Vec<Vec<usize>> = (0..h.rows()).map(|i| h.row_support(i)).collect();
        crate::combi::for_each_subset(c.n(), t, |e| {
            let mut left: BTreeSet<usize> = e.iter().copied().collect();
            while !left.is_empty() {
                let hit = supp.iter().find_map(|s| {
                    let mut er = s.iter().filter(|i| left.contains(i));
                    match (er.next(), er.next()) {
                        (Some(&i), None) => Some(i),
                        _ => None,
                    }
                });
                match hit {
                    Some(i) => {
                        left.remove(&i);
                    }
                    None => return false,
                }
            }
            true
        })
    }

    #[test]
    fn near_regular_examples() {
        let c = t2_near_regular_code(12, 4).unwrap();
        assert_eq!((c.n(), c.k()), (18, 12));
        assert_eq!(rate(&c), seq_rate_bound(4, 2).unwrap());
        let c = t2_near_regular_code(3, 2).unwrap();
        assert_eq!((c.n(), c.k()), (6, 3));
        assert!(peels_all(&c, 2));
        assert!(t2_near_regular_code(2, 4).is_err());
    }

    #[test]
    fn turan_examples() {
        let c = t2_turan_code(2, 2).unwrap();
        assert_eq!((c.n(), c.k()), (8, 4));
        let c = t2_turan_code(2, 1).unwrap();
        assert_eq!((c.n(), c.k()), (6, 3));
        assert!(peels_all(&c, 2));
        assert_eq!(t2_turan_code(4, 3).unwrap_err(), Error::InvalidBeta);
    }

    #[test]
    fn dim_optimal() {
        let c = t2_dim_optimal_code(5, 4).unwrap();
        assert_eq!((c.n(), c.k()), (15, 10));
        assert_eq!(c.k() as i128, crate::bounds::seq_dim_bound_t2(5, 4).unwrap());
        // r = C(4,1) + 3: l = 2, j = 3, one class of five weight-3 vectors
        let c = t2_dim_optimal_code(5, 7).unwrap();
        assert_eq!(c.k(), 10 + 5);
        let h = c.parity_check();
        assert!((0..h.rows()).all(|i| h.row_weight(i) == 8));
        assert!(peels_all(&c, 2));
        // j = 1 is not a multiple of l + 1 = 3
        assert_eq!(t2_dim_optimal_code(5, 5).unwrap_err(), Error::ParamDecompositionFails);
    }

    #[test]
    fn t3_fixtures() {
        let a = t3_catalog(T3Example::Ex1);
        assert_eq!((a.n(), a.k(), a.parity_check().rank()), (10, 5, 5));
        let b = t3_catalog(T3Example::Ex2);
        assert_eq!((b.n(), b.k(), b.parity_check().rank()), (14, 8, 6));
        assert!(peels_all(&a, 3) && peels_all(&b, 3));
        assert_eq!(a.min_distance().unwrap(), 4);
    }

    #[test]
    fn moore_codes() {
        let c = moore_code(2, 4).unwrap();
        assert_eq!((c.n(), c.k()), (15, 6));
        assert_eq!(rate(&c), seq_rate_bound(2, 4).unwrap());
        let c = moore_code(2, 5).unwrap();
        assert_eq!((c.n(), c.k()), (21, 8));
        assert!(peels_all(&c, 5));
        assert!(matches!(moore_code(3, 4), Err(Error::NotInCatalog { .. })));
    }

    #[test]
    fn general_small_t() {
        let c = seq_general_code(3, 2, AuxChoice::default()).unwrap().code;
        assert_eq!((c.n(), c.k()), (10, 6));
        let sc = seq_general_code(3, 3, AuxChoice::default()).unwrap();
        assert!(sc.provenance.aux.is_none());
        assert_eq!((sc.code.n(), sc.code.k()), (16, 9));
        assert!(peels_all(&sc.code, 3));
        assert_eq!(seq_general_code(3, 4, AuxChoice::default()).unwrap_err(), Error::UnsupportedT(4));
        assert_eq!(seq_general_code(6, 4, AuxChoice::default()).unwrap().code.n(), 175);
    }

    #[test]
    fn general_t5_with_plane_aux() {
        let sc = seq_general_code(3, 5, AuxChoice::default()).unwrap();
        let p = &sc.provenance;
        assert_eq!(p.base.node_count(), 25);
        assert_eq!(p.aux, Some((AuxSource::ProjectivePlane { q: 3 }, 26)));
        assert_eq!((sc.code.n(), sc.code.k()), (1352, 702));
        assert!(p.girth.unwrap() >= 6);
        assert!(p.base_coloring.as_ref().unwrap().is_proper(&p.base));
        assert_eq!(p.profile.rows, vec![104, 312, 234]);
        // odd t: n is a multiple of r^{s+1} + 2(r + ... + r^s) + 1 = 52
        assert_eq!(sc.code.n() % 52, 0);
    }

    #[test]
    fn general_even_base_is_properly_colored() {
        for r in 3..6 {
            let b = base_even(r, 2).unwrap();
            assert!(b.coloring.is_proper(&b.graph));
            assert_eq!(b.graph.node_count(), 4 * (1 + r + r * r));
            let deg = b.graph.degrees();
            assert!(deg[..4].iter().all(|&d| d == r));
            assert!(deg[4..].iter().all(|&d| d == r + 1));
        }
    }

    #[test]
    fn dense_budget_refuses_large_even_case() {
        assert!(matches!(seq_general_code(3, 6, AuxChoice::default()), Err(Error::BudgetExceeded { .. })));
        let g = seq_general_graph(3, 6, AuxChoice::default()).unwrap();
        assert!(g.girth.unwrap() >= 7);
        // even t: 2n is a multiple of r^{s+1} + 2(1 + r + ... + r^s)
        assert_eq!(2 * g.graph.edge_count() % (27 + 2 * 13), 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn near_regular_meets_length_and_row_weight(r in 2usize..7, k in 4usize..40) {
            if let Ok(c) = t2_near_regular_code(k, r) {
                prop_assert_eq!(c.k(), k);
                prop_assert_eq!(c.n(), k + (2 * k).div_ceil(r));
                let h = c.parity_check();
                prop_assert!((0..h.rows()).all(|i| h.row_weight(i) <= r + 1));
            }
        }

        #[test]
        fn odd_t_codes_are_rate_optimal(r in 2u64..5, seed in 0u64..1000) {
            let sc = seq_general_code(r, 5, AuxChoice::Random { seed });
            if let Ok(sc) = sc {
                prop_assert_eq!(rate(&sc.code), seq_rate_bound(r, 5).unwrap());
                prop_assert!(sc.provenance.girth.unwrap() >= 6);
            }
        }
    }
}
