//! Graph ingestion from edge-list files and synthetic generators.
//!
//! The edge-list format is the one used by the large public network
//! collections: whitespace-separated "u v" pairs, one per line, with
//! `#`-prefixed comment lines and blank lines skipped. Files ending in
//! `.gz` are transparently decompressed.

use crate::graph::{connected_components, Graph};
use flate2::read::GzDecoder;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("edge list produced an empty graph")]
    EmptyGraph,
}

#[derive(Debug, Error)]
pub enum GenError {
    #[error("generation failed after {retries} retries: {msg}")]
    GenerationFailed { retries: usize, msg: String },
}

/// Loader options. `symmetrize` treats each listed pair as an undirected
/// edge regardless of listing direction; without it the file must already
/// list both directions of every edge. `largest_cc` restricts the result
/// to the largest connected component, re-densifying node ids.
#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    pub symmetrize: bool,
    pub largest_cc: bool,
}

/// A loaded graph together with the original external id of each node,
/// kept for reporting since ids are remapped to a dense range.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub original_ids: Vec<u64>,
}

/// Reads an edge-list file into a [`Graph`]. Duplicate edges and
/// self-loops are dropped. Node ids may be arbitrary nonnegative integers;
/// they are remapped to 0..n-1 in order of first appearance.
pub fn load_edge_list(path: impl AsRef<Path>, options: LoadOptions) -> Result<LoadedGraph, LoadError> {
    let path = path.as_ref();
    let file = File::open(path)?;
    if path.extension().is_some_and(|e| e == "gz") {
        load_edge_list_from(BufReader::new(GzDecoder::new(file)), options)
    } else {
        load_edge_list_from(BufReader::new(file), options)
    }
}

/// As [`load_edge_list`] over any reader.
pub fn load_edge_list_from(reader: impl BufRead, options: LoadOptions) -> Result<LoadedGraph, LoadError> {
    let mut original_ids: Vec<u64> = Vec::new();
    let mut id_map: std::collections::HashMap<u64, u32> = std::collections::HashMap::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut intern = |ext: u64, original_ids: &mut Vec<u64>| -> u32 {
        *id_map.entry(ext).or_insert_with(|| {
            original_ids.push(ext);
            (original_ids.len() - 1) as u32
        })
    };

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (a, b) = match (fields.next(), fields.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(LoadError::ParseError { line: line_no, msg: format!("expected two node ids, got {trimmed:?}") });
            }
        };
        if fields.next().is_some() {
            return Err(LoadError::ParseError { line: line_no, msg: format!("expected two node ids, got {trimmed:?}") });
        }
        let parse = |s: &str| -> Result<u64, LoadError> {
            s.parse::<u64>().map_err(|_| LoadError::ParseError { line: line_no, msg: format!("invalid node id {s:?}") })
        };
        let u = intern(parse(a)?, &mut original_ids);
        let v = intern(parse(b)?, &mut original_ids);
        pairs.push((u, v));
    }
    if original_ids.is_empty() {
        return Err(LoadError::EmptyGraph);
    }

    if !options.symmetrize {
        // Strict mode: the listing itself must be symmetric.
        let directed: HashSet<(u32, u32)> = pairs.iter().copied().filter(|(u, v)| u != v).collect();
        for &(u, v) in &directed {
            if !directed.contains(&(v, u)) {
                return Err(LoadError::ParseError {
                    line: 0,
                    msg: format!(
                        "edge {} -> {} has no reverse listing; pass symmetrize to accept one-directional input",
                        original_ids[u as usize], original_ids[v as usize]
                    ),
                });
            }
        }
    }

    let n = original_ids.len();
    let mut graph = Graph::from_edges(n, &pairs);
    if options.largest_cc {
        let (comp, h) = connected_components(&graph);
        if h > 1 {
            let mut sizes = vec![0usize; h];
            for &c in &comp {
                sizes[c as usize] += 1;
            }
            let keep = sizes
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
                .map(|(i, _)| i as u32)
                .expect("h >= 1");
            let mut remap = vec![u32::MAX; n];
            let mut kept_ids = Vec::new();
            for v in 0..n {
                if comp[v] == keep {
                    remap[v] = kept_ids.len() as u32;
                    kept_ids.push(original_ids[v]);
                }
            }
            let kept_edges: Vec<(u32, u32)> = graph
                .edges()
                .filter(|&(u, v)| comp[u as usize] == keep && comp[v as usize] == keep)
                .map(|(u, v)| (remap[u as usize], remap[v as usize]))
                .collect();
            graph = Graph::from_edges(kept_ids.len(), &kept_edges);
            original_ids = kept_ids;
        }
    }
    Ok(LoadedGraph { graph, original_ids })
}

/// Writes a graph in the edge-list format, one "u v" line per edge with
/// u < v. Round-trips through [`load_edge_list`].
pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_edge_list_to(g, &mut w)
}

pub fn write_edge_list_to(g: &Graph, w: &mut impl Write) -> std::io::Result<()> {
    writeln!(w, "# undirected edge list: {} nodes, {} edges", g.node_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

/// rows x cols grid graph: n = rows*cols, m = rows*(cols-1) + cols*(rows-1),
/// diameter rows + cols - 2.
pub fn gen_mesh(rows: usize, cols: usize) -> Graph {
    assert!(rows >= 1 && cols >= 1);
    let id = |r: usize, c: usize| (r * cols + c) as u32;
    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            // Neighbor ids in ascending order: up, left, right, down.
            let mut list = Vec::with_capacity(4);
            if r > 0 {
                list.push(id(r - 1, c));
            }
            if c > 0 {
                list.push(id(r, c - 1));
            }
            if c + 1 < cols {
                list.push(id(r, c + 1));
            }
            if r + 1 < rows {
                list.push(id(r + 1, c));
            }
            adj.push(list);
        }
    }
    Graph::from_sorted_adjacency(adj)
}

pub fn gen_path(n: usize) -> Graph {
    gen_mesh(1, n)
}

pub fn gen_cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 nodes");
    let edges: Vec<(u32, u32)> = (0..n as u32).map(|v| (v, (v + 1) % n as u32)).collect();
    Graph::from_edges(n, &edges)
}

pub fn gen_complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Hub node 0 joined to n-1 leaves.
pub fn gen_star(n: usize) -> Graph {
    assert!(n >= 2);
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

const GEN_RETRIES: usize = 200;

/// A random near-regular expander on `n_total - path_len` nodes with a
/// path of `path_len` nodes hanging off one of them: a long-diameter
/// appendage on an otherwise well-connected graph.
///
/// The expander is the union of degree/2 independent random Hamiltonian
/// cycles (plus a random perfect matching when degree is odd), each redrawn
/// on edge collisions; this is connected by construction.
pub fn gen_expander_plus_path(n_total: usize, path_len: usize, degree: usize, seed: u64) -> Result<Graph, GenError> {
    assert!(n_total > path_len, "need at least one expander node");
    let n_exp = n_total - path_len;
    assert!(degree >= 3, "degree must be at least 3");
    assert!(degree * n_exp % 2 == 0, "degree * expander size must be even");
    assert!(degree < n_exp, "degree must be below the expander size");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(4);
    let mut edge_set: HashSet<(u32, u32)> = HashSet::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut add = |u: u32, v: u32, edge_set: &mut HashSet<(u32, u32)>, edges: &mut Vec<(u32, u32)>| -> bool {
        let key = (u.min(v), u.max(v));
        if edge_set.insert(key) {
            edges.push(key);
            true
        } else {
            false
        }
    };

    let mut order: Vec<u32> = (0..n_exp as u32).collect();
    for _ in 0..degree / 2 {
        let mut ok = false;
        'retry: for _ in 0..GEN_RETRIES {
            order.shuffle(&mut rng);
            // A Hamiltonian cycle must avoid every edge drawn so far.
            for i in 0..n_exp {
                let (u, v) = (order[i], order[(i + 1) % n_exp]);
                if edge_set.contains(&(u.min(v), u.max(v))) {
                    continue 'retry;
                }
            }
            for i in 0..n_exp {
                add(order[i], order[(i + 1) % n_exp], &mut edge_set, &mut edges);
            }
            ok = true;
            break;
        }
        if !ok {
            return Err(GenError::GenerationFailed { retries: GEN_RETRIES, msg: "could not draw a disjoint Hamiltonian cycle".into() });
        }
    }
    if degree % 2 == 1 {
        let mut ok = false;
        'retry_matching: for _ in 0..GEN_RETRIES {
            order.shuffle(&mut rng);
            for pair in order.chunks_exact(2) {
                let (u, v) = (pair[0], pair[1]);
                if edge_set.contains(&(u.min(v), u.max(v))) {
                    continue 'retry_matching;
                }
            }
            for pair in order.chunks_exact(2) {
                add(pair[0], pair[1], &mut edge_set, &mut edges);
            }
            ok = true;
            break;
        }
        if !ok {
            return Err(GenError::GenerationFailed { retries: GEN_RETRIES, msg: "could not draw a disjoint perfect matching".into() });
        }
    }

    if path_len > 0 {
        let attach = rng.gen_range(0..n_exp as u32);
        let first = n_exp as u32;
        edges.push((attach, first));
        for i in 1..path_len as u32 {
            edges.push((first + i - 1, first + i));
        }
    }
    Ok(Graph::from_edges(n_total, &edges))
}

/// Appends a path of `length` new nodes to a seeded-random existing node,
/// increasing the diameter by up to `length` without touching the rest of
/// the graph.
pub fn append_chain(g: &Graph, length: usize, seed: u64) -> Graph {
    assert!(length >= 1, "chain length must be at least 1");
    let n = g.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(5);
    let attach = rng.gen_range(0..n as u32);
    let mut edges: Vec<(u32, u32)> = g.edges().collect();
    edges.push((attach, n as u32));
    for i in 1..length as u32 {
        edges.push((n as u32 + i - 1, n as u32 + i));
    }
    Graph::from_edges(n + length, &edges)
}
