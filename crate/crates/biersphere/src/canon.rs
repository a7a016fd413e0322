//! Canonical labeling of small hypergraphs by iterated color refinement with
//! individualization. Two hypergraphs on the same number of vertices receive
//! equal labels iff they are isomorphic; desk scale (tens of vertices).

/// Canonical byte label of the hypergraph with vertices `0..nv` and the given
/// edges (vertex lists, in any order). Isolated vertices are significant.
pub(crate) fn canonical_hypergraph(nv: usize, edges: &[Vec<usize>]) -> Vec<u8> {
    assert!(nv <= 255, "canonical_hypergraph is for small hypergraphs");
    let edges: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            e.sort_unstable();
            e
        })
        .collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (ei, e) in edges.iter().enumerate() {
        for &v in e {
            incident[v].push(ei);
        }
    }
    let ctx = Ctx {
        nv,
        edges,
        incident,
    };
    let mut colors = vec![0usize; nv];
    refine(&ctx, &mut colors);
    search(&ctx, &colors)
}

struct Ctx {
    nv: usize,
    edges: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

/// Refines `colors` (values are contiguous class ids, ordered canonically by
/// class signature) until stable. Signatures only use isomorphism-invariant
/// data, so isomorphic inputs refine identically.
fn refine(ctx: &Ctx, colors: &mut Vec<usize>) {
    loop {
        let mut sigs: Vec<(usize, Vec<(usize, Vec<usize>)>, usize)> = Vec::with_capacity(ctx.nv);
        for v in 0..ctx.nv {
            let mut around: Vec<(usize, Vec<usize>)> = ctx.incident[v]
                .iter()
                .map(|&ei| {
                    let mut cs: Vec<usize> = ctx.edges[ei].iter().map(|&u| colors[u]).collect();
                    cs.sort_unstable();
                    (ctx.edges[ei].len(), cs)
                })
                .collect();
            around.sort();
            sigs.push((colors[v], around, v));
        }
        let mut order: Vec<usize> = (0..ctx.nv).collect();
        order.sort_by(|&a, &b| (&sigs[a].0, &sigs[a].1).cmp(&(&sigs[b].0, &sigs[b].1)));
        let mut next = vec![0usize; ctx.nv];
        let mut classes = 0usize;
        for (rank, &v) in order.iter().enumerate() {
            if rank > 0 {
                let p = order[rank - 1];
                if (&sigs[p].0, &sigs[p].1) != (&sigs[v].0, &sigs[v].1) {
                    classes += 1;
                }
            }
            next[v] = classes;
        }
        let old_classes = colors.iter().max().map_or(0, |m| m + 1);
        let stable = classes + 1 == old_classes;
        *colors = next;
        if stable {
            return;
        }
    }
}

/// Individualization-refinement search for the minimal relabeled edge list.
/// The candidate set is isomorphism-invariant, so the minimum over it is a
/// canonical form even though it is a strict subset of all permutations.
fn search(ctx: &Ctx, colors: &[usize]) -> Vec<u8> {
    // Find the first class (by color id) with more than one member.
    let mut class_of: Vec<Vec<usize>> = Vec::new();
    for v in 0..ctx.nv {
        let c = colors[v];
        while class_of.len() <= c {
            class_of.push(Vec::new());
        }
        class_of[c].push(v);
    }
    let target = class_of.iter().position(|c| c.len() > 1);
    match target {
        None => encode(ctx, colors),
        Some(ci) => {
            let mut best: Option<Vec<u8>> = None;
            for &v in &class_of[ci] {
                // Individualize v: it keeps color ci, everything at color >= ci
                // (other than v) shifts up by one.
                let mut next: Vec<usize> = colors
                    .iter()
                    .map(|&c| if c >= ci { c + 1 } else { c })
                    .collect();
                next[v] = ci;
                refine(ctx, &mut next);
                let cand = search(ctx, &next);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            best.unwrap()
        }
    }
}

/// Encodes the hypergraph relabeled by the discrete coloring (vertex v maps to
/// its color, which is a bijection onto 0..nv here).
fn encode(ctx: &Ctx, colors: &[usize]) -> Vec<u8> {
    let mut relabeled: Vec<Vec<u8>> = ctx
        .edges
        .iter()
        .map(|e| {
            let mut img: Vec<u8> = e.iter().map(|&v| colors[v] as u8).collect();
            img.sort_unstable();
            img
        })
        .collect();
    relabeled.sort();
    let mut out = Vec::with_capacity(2 + 3 + relabeled.iter().map(|e| e.len() + 1).sum::<usize>());
    out.push(ctx.nv as u8);
    out.push((relabeled.len() >> 8) as u8);
    out.push((relabeled.len() & 0xff) as u8);
    for e in relabeled {
        out.push(e.len() as u8);
        out.extend_from_slice(&e);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(nv: usize, edges: &[&[usize]]) -> Vec<u8> {
        canonical_hypergraph(nv, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn relabelings_collide() {
        // A path 0-1-2 relabeled three ways.
        let a = canon(3, &[&[0, 1], &[1, 2]]);
        let b = canon(3, &[&[2, 1], &[1, 0]]);
        let c = canon(3, &[&[0, 2], &[2, 1]]);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn distinguishes_path_from_triangle_and_star() {
        let path = canon(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let star = canon(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let tri = canon(4, &[&[0, 1], &[1, 2], &[2, 0]]);
        assert_ne!(path, star);
        assert_ne!(path, tri);
        assert_ne!(star, tri);
    }

    #[test]
    fn isolated_vertices_matter() {
        let one = canon(3, &[&[0, 1]]);
        let two = canon(4, &[&[0, 1]]);
        assert_ne!(one, two);
    }

    #[test]
    fn vertex_transitive_cycle_is_stable() {
        // C5 under all 120 relabelings collapses to one label.
        let base: Vec<Vec<usize>> = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]];
        let reference = canonical_hypergraph(5, &base);
        let perms = permutations(5);
        for p in perms {
            let edges: Vec<Vec<usize>> = base
                .iter()
                .map(|e| e.iter().map(|&v| p[v]).collect())
                .collect();
            assert_eq!(canonical_hypergraph(5, &edges), reference);
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for sub in permutations(n - 1) {
            for pos in 0..n {
                let mut p = sub.clone();
                p.insert(pos, n - 1);
                out.push(p);
            }
        }
        out
    }
}
