use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Outcome of [`planarity_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarityReport {
    /// Number of vertices.
    pub n: usize,
    /// Number of distinct edges.
    pub edges: usize,
    /// Whether `|E| <= 3n - 6` (vacuous for `n < 3`).
    pub euler_bound: bool,
    /// Whether the graph is planar.
    pub planar: bool,
}

/// Both the edge-count bound and the full planarity test.
pub fn planarity_check(n: usize, edges: &[(usize, usize)]) -> PlanarityReport {
    let adj = adjacency(n, edges);
    let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let euler_bound = n < 3 || m <= 3 * n - 6;
    PlanarityReport { n, edges: m, euler_bound, planar: euler_bound && adj_planar(&adj) }
}

/// Whether the simple graph on `0..n` with the given edges is planar.
///
/// Self-loops and repeated edges are ignored. Each biconnected block is
/// tested with the Demoucron-Malgrange-Pertuiset face-embedding algorithm,
/// which is polynomial and exact.
pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    planarity_check(n, edges).planar
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a != b && a < n && b < n {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

fn adj_planar(adj: &[Vec<usize>]) -> bool {
    blocks(adj).iter().all(|block| block_planar(adj.len(), block))
}

/// Edge sets of the biconnected blocks, by Tarjan's lowpoint algorithm.
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // Frames: (vertex, parent, next neighbour position).
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut pos)) = frames.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// A bridge of the current embedding: a chord or a component of the
/// unembedded vertices with its attachment edges.
struct Fragment {
    attachments: Vec<usize>,
    /// Unembedded vertices of the fragment (empty for a chord).
    inner: Vec<usize>,
    /// For a chord, its endpoints.
    chord: Option<(usize, usize)>,
}

fn block_planar(n: usize, block: &[(usize, usize)]) -> bool {
    let vertices = {
        let mut vs: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    };
    let (v, e) = (vertices.len(), block.len());
    if e <= 3 || e == v {
        return true;
    }
    if v >= 3 && e > 3 * v - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in block {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut in_h = vec![false; n];
    let mut embedded: Vec<(usize, usize)> = Vec::new();
    let cycle = find_cycle(&adj, block[0]);
    for w in 0..cycle.len() {
        in_h[cycle[w]] = true;
        add_edge(&mut embedded, cycle[w], cycle[(w + 1) % cycle.len()]);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    loop {
        embedded.sort_unstable();
        let fragments = fragments(&adj, &vertices, &in_h, &embedded);
        if fragments.is_empty() {
            return true;
        }
        let mut choice: Option<(usize, usize)> = None;
        for (f, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&k| frag.attachments.iter().all(|a| faces[k].contains(a))).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((f, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((f, admissible[0]));
                    }
                }
            }
        }
        let (f, face) = choice.expect("some fragment was examined");
        let path = fragment_path(&adj, &in_h, &fragments[f]);
        for w in path.windows(2) {
            add_edge(&mut embedded, w[0], w[1]);
        }
        for &x in &path {
            in_h[x] = true;
        }
        let old = faces.swap_remove(face);
        let (a, b) = (path[0], path[path.len() - 1]);
        let ia = old.iter().position(|&x| x == a).expect("attachment on face");
        let ib = old.iter().position(|&x| x == b).expect("attachment on face");
        let k = old.len();
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![old[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % k;
                out.push(old[i]);
            }
            out
        };
        // Face one: a .. b along the old face, then back to a along the path.
        let mut one = walk(ia, ib);
        one.extend(path[1..path.len() - 1].iter().rev());
        // Face two: b .. a along the old face, then along the path to b.
        let mut two = walk(ib, ia);
        two.extend(path[1..path.len() - 1].iter());
        faces.push(one);
        faces.push(two);
    }
}

fn add_edge(edges: &mut Vec<(usize, usize)>, a: usize, b: usize) {
    edges.push((a.min(b), a.max(b)));
}

/// A cycle through the edge `(a, b)`: the edge plus a shortest path from
/// `b` back to `a` avoiding it, which exists in a biconnected block.
fn find_cycle(adj: &[Vec<usize>], (a, b): (usize, usize)) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[b] = b;
    let mut queue = VecDeque::from([b]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if v == b && w == a || prev[w] != usize::MAX {
                continue;
            }
            prev[w] = v;
            if w == a {
                let mut cycle = vec![a];
                let mut x = a;
                while x != b {
                    x = prev[x];
                    cycle.push(x);
                }
                return cycle;
            }
            queue.push_back(w);
        }
    }
    unreachable!("an edge of a block with a cycle lies on a cycle")
}

fn fragments(adj: &[Vec<usize>], vertices: &[usize], in_h: &[bool], embedded: &[(usize, usize)]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &a in vertices {
        if !in_h[a] {
            continue;
        }
        for &b in &adj[a] {
            if a < b && in_h[b] && embedded.binary_search(&(a, b)).is_err() {
                out.push(Fragment { attachments: vec![a, b], inner: Vec::new(), chord: Some((a, b)) });
            }
        }
    }
    let mut seen = vec![false; adj.len()];
    for &s in vertices {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut inner = Vec::new();
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            inner.push(v);
            for &w in &adj[v] {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { attachments, inner, chord: None });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let start = frag.attachments[0];
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &w in &adj[start] {
        if !in_h[w] && frag.inner.contains(&w) && prev[w] == usize::MAX {
            prev[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if in_h[w] && w != start {
                let mut path = vec![w, v];
                let mut x = v;
                while prev[x] != start {
                    x = prev[x];
                    path.push(x);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if !in_h[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("a fragment of a biconnected block has two attachments")
}
