//! Brute-force references: exhaustive maps, colorings and partitions, with
//! no use of the library's search or canonical coding.

#![allow(dead_code)]

use acl_lab::Graph;

/// Calls `visit` on every injective map `0..k -> 0..n`.
pub fn injections(k: usize, n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for h in 0..n {
            if !used[h] {
                used[h] = true;
                cur.push(h);
                rec(k, n, cur, used, visit);
                cur.pop();
                used[h] = false;
            }
        }
    }
    rec(k, n, &mut Vec::new(), &mut vec![false; n], visit);
}

pub fn count_maps(p: &Graph, h: &Graph, induced: bool) -> usize {
    let mut count = 0;
    injections(p.order(), h.order(), &mut |m| {
        let ok = (0..m.len()).all(|i| {
            (i + 1..m.len()).all(|j| {
                let pe = p.has_edge(i, j);
                let he = h.has_edge(m[i], m[j]);
                (!pe || he) && (!induced || pe || !he)
            })
        });
        count += usize::from(ok);
    });
    count
}

pub fn weakly_embeds(p: &Graph, h: &Graph) -> bool {
    p.order() <= h.order() && count_maps(p, h, false) > 0
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && count_maps(a, b, true) > 0
}

pub fn chromatic(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| {
            if n == 0 {
                return true;
            }
            if k == 0 {
                return false;
            }
            let total = k.pow(n as u32);
            (0..total).any(|mut code| {
                let mut col = vec![0; n];
                for c in col.iter_mut() {
                    *c = code % k;
                    code /= k;
                }
                g.edges().all(|(u, v)| col[u] != col[v])
            })
        })
        .unwrap()
}

/// Restricted growth strings: `labels[v]` is the class of `v`.
pub fn set_partitions(n: usize, visit: &mut dyn FnMut(&[usize], usize)) {
    fn rec(v: usize, n: usize, classes: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize], usize)) {
        if v == n {
            visit(labels, classes);
            return;
        }
        for c in 0..=classes {
            labels.push(c);
            rec(v + 1, n, classes.max(c + 1), labels, visit);
            labels.pop();
        }
    }
    rec(0, n, 0, &mut Vec::new(), visit);
}

/// All homomorphic images, one per isomorphism class.
pub fn images(g: &Graph) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    set_partitions(g.order(), &mut |labels, classes| {
        if g.edges().any(|(u, v)| labels[u] == labels[v]) {
            return;
        }
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (labels[u], labels[v])).collect();
        let q = Graph::from_edges(classes, &edges).unwrap();
        if !out.iter().any(|x| isomorphic(x, &q)) {
            out.push(q);
        }
    });
    out
}

/// Images into which no other image weakly embeds.
pub fn minimal_images(g: &Graph) -> Vec<Graph> {
    let all = images(g);
    all.iter()
        .filter(|x| !all.iter().any(|y| !isomorphic(x, y) && weakly_embeds(y, x)))
        .cloned()
        .collect()
}

/// Same multiset of isomorphism classes.
pub fn same_classes(a: &[Graph], b: &[Graph]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.iter().any(|y| isomorphic(x, y)))
}

pub fn longest_path(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, seen: &mut Vec<bool>, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                rec(g, w, seen, len + 1, best);
                seen[w] = false;
            }
        }
    }
    let mut best = 0;
    for v in g.vertices() {
        let mut seen = vec![false; g.order()];
        seen[v] = true;
        rec(g, v, &mut seen, 0, &mut best);
    }
    best
}

pub fn brute_join(a: &Graph, b: &Graph) -> Graph {
    let n = a.order();
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend(b.edges().map(|(u, v)| (u + n, v + n)));
    for u in 0..n {
        for v in 0..b.order() {
            edges.push((u, n + v));
        }
    }
    Graph::from_edges(n + b.order(), &edges).unwrap()
}
