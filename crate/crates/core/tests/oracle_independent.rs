//! Checks the enumeration oracle and graph6 writer against brute force code
//! that shares nothing with the library beyond the `Graph` type.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use chemgraph::oracle::chemical_pairs;
use chemgraph::{builtin, enumerate_connected_maxdeg3, write_graph6, Direction, EdgeCensus, Graph, Oracle};

/// Adjacency bitmask per vertex for the edge subset `mask` of `pairs`.
fn rows_of(n: usize, pairs: &[(usize, usize)], mask: u64) -> Vec<u32> {
    let mut rows = vec![0u32; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    rows
}

fn connected(rows: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen.count_ones() as usize == rows.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

/// Smallest upper-triangle bit string over all vertex permutations.
fn min_form(rows: &[u32], perms: &[Vec<usize>]) -> u64 {
    let n = rows.len();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            let mut bit = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if rows[p[i]] >> p[j] & 1 == 1 {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            code
        })
        .min()
        .unwrap()
}

fn brute_force_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut forms = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let rows = rows_of(n, &pairs, mask);
        if rows.iter().all(|r| r.count_ones() <= 3) && connected(&rows) {
            forms.insert(min_form(&rows, &perms));
        }
    }
    forms.len()
}

#[test]
fn counts_match_brute_force_up_to_six() {
    for n in 1..=6 {
        assert_eq!(enumerate_connected_maxdeg3(n, 2).unwrap().len(), brute_force_classes(n), "n = {n}");
    }
}

/// Canonical string that only permutes vertices within degree classes,
/// after ordering vertices by degree.
fn degree_class_form(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = by_degree.into_values().collect();
    let mut best: Option<Vec<u64>> = None;
    let mut order = Vec::with_capacity(n);
    walk(g, &classes, 0, &mut order, &mut best);
    best.unwrap()
}

fn walk(g: &Graph, classes: &[Vec<usize>], c: usize, order: &mut Vec<usize>, best: &mut Option<Vec<u64>>) {
    if c == classes.len() {
        let pos: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let code: Vec<u64> = order
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    for p in permutations(classes[c].len()) {
        let before = order.len();
        order.extend(p.iter().map(|&i| classes[c][i]));
        walk(g, classes, c + 1, order, best);
        order.truncate(before);
    }
}

#[test]
fn no_two_emitted_graphs_are_isomorphic_up_to_eight() {
    for n in 1..=8 {
        let graphs = enumerate_connected_maxdeg3(n, 2).unwrap();
        let forms: HashSet<Vec<u64>> = graphs.iter().map(degree_class_form).collect();
        assert_eq!(forms.len(), graphs.len(), "n = {n}");
        for g in &graphs {
            assert!(g.is_connected() && g.max_degree() <= 3);
        }
    }
}

#[test]
fn known_counts_beyond_brute_force() {
    let counts: Vec<usize> = (7..=9).map(|n| enumerate_connected_maxdeg3(n, 2).unwrap().len()).collect();
    assert_eq!(counts, [64, 194, 531]);
}

/// graph6 writer for n <= 62, straight from the format description.
fn graph6_by_hand(g: &Graph) -> String {
    let n = g.order();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | u8::from(b));
        s.push((v + 63) as char);
    }
    s
}

#[test]
fn graph6_matches_hand_encoder() {
    let k4 = Graph::complete(4);
    assert_eq!(graph6_by_hand(&k4), "C~");
    assert_eq!(write_graph6(&k4), graph6_by_hand(&k4));
    for n in 1..=7 {
        for g in enumerate_connected_maxdeg3(n, 1).unwrap() {
            assert_eq!(write_graph6(&g), graph6_by_hand(&g));
        }
    }
    assert_eq!(write_graph6(&Graph::petersen()), graph6_by_hand(&Graph::petersen()));
}

fn census_of(rows: &[u32]) -> EdgeCensus {
    let mut c = [0u64; 5];
    for u in 0..rows.len() {
        for v in u + 1..rows.len() {
            if rows[u] >> v & 1 == 1 {
                let (a, b) = {
                    let (x, y) = (rows[u].count_ones(), rows[v].count_ones());
                    (x.min(y), x.max(y))
                };
                let slot = match (a, b) {
                    (1, 2) => 0,
                    (1, 3) => 1,
                    (2, 2) => 2,
                    (2, 3) => 3,
                    (3, 3) => 4,
                    _ => unreachable!("no K2 component in a connected graph of order 7"),
                };
                c[slot] += 1;
            }
        }
    }
    EdgeCensus::from(c)
}

/// Census sets of all labeled connected graphs of order 7, by size.
fn brute_force_atlas_seven() -> BTreeMap<usize, BTreeSet<EdgeCensus>> {
    let n = 7;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out: BTreeMap<usize, BTreeSet<EdgeCensus>> = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let m = mask.count_ones() as usize;
        if m + 1 < n || 2 * m + 3 > 3 * n {
            continue;
        }
        let rows = rows_of(n, &pairs, mask);
        if rows.iter().all(|r| r.count_ones() <= 3) && connected(&rows) {
            out.entry(m).or_default().insert(census_of(&rows));
        }
    }
    out
}

#[test]
fn order_seven_atlas_and_extremes_match_brute_force() {
    let brute = brute_force_atlas_seven();
    let oracle = Oracle::new(2);
    for (n, m) in chemical_pairs(7, 7) {
        assert_eq!(oracle.census_atlas(n, m).unwrap(), brute[&m], "m = {m}");
    }
    let randic = builtin("Randic").unwrap();
    let best = brute[&6]
        .iter()
        .map(|x| randic.evaluate(x))
        .fold(f64::NEG_INFINITY, f64::max);
    assert!((best - (2f64.sqrt() + 2.0)).abs() < 1e-12);
    let report = oracle.extremal_censuses(&randic, 7, 6, Direction::Max).unwrap();
    assert!((report.optimum - best).abs() < 1e-12);
    assert_eq!(report.census_set(), [EdgeCensus::new(2, 0, 4, 0, 0)].into());

    let az = builtin("aZagreb").unwrap();
    let best = brute[&8].iter().map(|x| az.evaluate(x)).fold(f64::NEG_INFINITY, f64::max);
    let winners: BTreeSet<EdgeCensus> =
        brute[&8].iter().copied().filter(|x| (az.evaluate(x) - best).abs() <= 1e-9 * best).collect();
    assert_eq!(winners, [EdgeCensus::new(1, 1, 0, 1, 5)].into());
    assert_eq!(oracle.extremal_censuses(&az, 7, 8, Direction::Max).unwrap().census_set(), winners);
}
