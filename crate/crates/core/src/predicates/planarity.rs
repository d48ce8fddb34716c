//! Planarity by incremental path addition (Demoucron–Malgrange–Pertuiset).
//!
//! The graph is split into blocks; each block is embedded starting from a
//! cycle, repeatedly adding a path of some fragment into a face that can
//! hold all of its attachments. No embedding is returned.

use std::collections::VecDeque;

use crate::multigraph::{Multigraph, Vertex};

/// Is the simple support of `g` planar?
pub fn is_planar(g: &Multigraph) -> bool {
    let s = g.underlying_simple();
    let n = s.vertex_count();
    let m = s.edge_count();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    blocks(&s).iter().all(|block| block_is_planar(block))
}

/// Edge lists of the biconnected components.
fn blocks(g: &Multigraph) -> Vec<Vec<(Vertex, Vertex)>> {
    struct State<'a> {
        g: &'a Multigraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        stack: Vec<usize>,
        out: Vec<Vec<(Vertex, Vertex)>>,
    }
    const UNSEEN: usize = usize::MAX;

    fn dfs(st: &mut State<'_>, u: Vertex, parent_edge: usize) {
        st.disc[u] = st.timer;
        st.low[u] = st.timer;
        st.timer += 1;
        for &(w, e) in st.g.incident(u) {
            if e == parent_edge {
                continue;
            }
            if st.disc[w] == UNSEEN {
                st.stack.push(e);
                dfs(st, w, e);
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(top) = st.stack.pop() {
                        let edge = st.g.edges()[top];
                        block.push((edge.u, edge.v));
                        if top == e {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if st.disc[w] < st.disc[u] {
                st.stack.push(e);
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }

    let n = g.vertex_count();
    let mut st = State {
        g,
        disc: vec![UNSEEN; n],
        low: vec![0; n],
        timer: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == UNSEEN {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.out
}

enum FragmentKind {
    Chord(usize, usize),
    Piece(Vec<bool>),
}

struct Fragment {
    attachments: Vec<usize>,
    kind: FragmentKind,
}

fn block_is_planar(block: &[(Vertex, Vertex)]) -> bool {
    // local relabelling
    let mut ids: Vec<Vertex> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let k = ids.len();
    if k <= 4 {
        return true;
    }
    let m = block.len();
    if m > 3 * k - 6 {
        return false;
    }
    if m == k {
        // a cycle
        return true;
    }
    let local = |x: Vertex| ids.binary_search(&x).unwrap();
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in block {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let cycle = initial_cycle(&adj);
    let mut in_h = vec![false; k];
    let mut embedded = vec![vec![false; k]; k];
    let mut embedded_count = 0;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        embedded[a][b] = true;
        embedded[b][a] = true;
        embedded_count += 1;
    }
    let mut faces = vec![cycle.clone(), cycle];

    while embedded_count < m {
        let fragments = fragments(&adj, &in_h, &embedded);
        let face_sets: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut s = vec![false; k];
                for &x in f {
                    s[x] = true;
                }
                s
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        let mut fallback: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|&a| face_sets[f][a]))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if fallback.is_none() {
                        fallback = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice
            .or(fallback)
            .expect("unembedded edges imply a fragment");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            embedded[w[0]][w[1]] = true;
            embedded[w[1]][w[0]] = true;
            embedded_count += 1;
        }
        for &x in &path {
            in_h[x] = true;
        }
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }
    true
}

fn initial_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // 0 - a, then a shortest a-0 path avoiding the edge itself
    let a = adj[0][0];
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut queue = VecDeque::new();
    parent[a] = a;
    queue.push_back(a);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if x == a && y == 0 {
                continue;
            }
            if parent[y] == usize::MAX {
                parent[y] = x;
                if y == 0 {
                    queue.clear();
                    break;
                }
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![0];
    let mut x = parent[0];
    while x != a {
        cycle.push(x);
        x = parent[x];
    }
    cycle.push(a);
    cycle
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], embedded: &[Vec<bool>]) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for u in 0..k {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !embedded[u][v] {
                out.push(Fragment {
                    attachments: vec![u, v],
                    kind: FragmentKind::Chord(u, v),
                });
            }
        }
    }
    let mut seen = in_h.to_vec();
    for s in 0..k {
        if seen[s] {
            continue;
        }
        let mut members = vec![false; k];
        let mut attach = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            members[x] = true;
            for &y in &adj[x] {
                if in_h[y] {
                    attach.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        out.push(Fragment {
            attachments: attach,
            kind: FragmentKind::Piece(members),
        });
    }
    out
}

fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    match &frag.kind {
        FragmentKind::Chord(u, v) => vec![*u, *v],
        FragmentKind::Piece(members) => {
            let start = frag.attachments[0];
            let k = adj.len();
            let mut parent = vec![usize::MAX; k];
            let mut queue = VecDeque::new();
            for &y in &adj[start] {
                if members[y] && parent[y] == usize::MAX {
                    parent[y] = start;
                    queue.push_back(y);
                }
            }
            while let Some(x) = queue.pop_front() {
                if let Some(&end) = adj[x].iter().find(|&&y| in_h[y] && y != start) {
                    let mut path = vec![end];
                    let mut cur = x;
                    while cur != start {
                        path.push(cur);
                        cur = parent[cur];
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
                for &y in &adj[x] {
                    if members[y] && parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            unreachable!("fragment of a block has two attachments")
        }
    }
}

/// Splits a face along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let len = face.len();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let segment = |from: usize, to: usize| {
        let mut seg = Vec::new();
        let mut p = from;
        loop {
            seg.push(face[p]);
            if p == to {
                break;
            }
            p = (p + 1) % len;
        }
        seg
    };
    let interior = &path[1..path.len() - 1];
    let mut first = segment(i, j);
    first.extend(interior.iter().rev());
    let mut second = segment(j, i);
    second.extend(interior.iter());
    (first, second)
}
