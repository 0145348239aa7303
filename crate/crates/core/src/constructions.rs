//! The named example graphs, with fixed vertex numbering.
//!
//! | graph | numbering |
//! |-------|-----------|
//! | `M_n` | `0`, then `A_n = 1..=n` (vertex `(i,0)` is `i`), then `B_n = n+1..=2n` (vertex `(i,1)` is `n+i`) |
//! | `G*(r,n,m)` | blocks `A_i = i*n..(i+1)*n`, then `B = r*n..r*n+m`, then one `v_S` per `S` in lexicographic order |
//! | bow-tie | center `0`, triangles `{0,1,2}` and `{0,3,4}` |
//! | `T1 + T2 + P_n` | `T1 = {0,1,2}`, common vertex `2`, `T2 = {2,3,4}`, path `4 - 5 - ... - 4+n` |
//! | `K_n + K_3` | clique `0..n`, triangle `{n-1, n, n+1}` |
//! | `K_n + P_k` | clique `0..n`, path `n-1 - n - ... - n-1+k` |
//! | wheel | hub `0`, rim `1..=2n+1` |
//!
//! `M_1` is disconnected: `b_1` has no neighbor (it is only adjacent to
//! `a_j` for `j != 1`, and there is no such `j`).

use crate::error::{Error, Result};
use crate::graph::{join, Graph};
use crate::standard::{complete, cycle};

/// Mycielski-type graph: `0` adjacent to all of `A_n`, `B_n` complete,
/// `A_n` independent, `(i,0) ~ (j,1)` iff `i != j`. Order `2n + 1`.
pub fn mycielski_sub(n: usize) -> Graph {
    let mut g = Graph::empty(2 * n + 1);
    for i in 1..=n {
        g.add_edge(0, i);
        for j in 1..=n {
            if i != j {
                g.add_edge(i, n + j);
            }
            if i < j {
                g.add_edge(n + i, n + j);
            }
        }
    }
    g
}

/// `G*` over `G = r·K_n + K_m`: one new vertex per set `S` meeting each
/// `A_i` in `n - 1` vertices and `B` in `min(m, n - 1)` vertices, adjacent
/// exactly to `S`; the new vertices are independent.
pub fn bouquet_star(r: usize, n: usize, m: usize) -> Result<Graph> {
    if !(n >= m && m >= 1 && (r >= 2 || m + 1 >= n)) || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "bouquet star needs r >= 1, n >= m >= 1 and (r >= 2 or m >= n - 1); got ({r},{n},{m})"
        )));
    }
    let m0 = m.min(n - 1);
    let mut g = Graph::empty(r * n + m);
    for i in 0..r {
        for u in i * n..(i + 1) * n {
            for v in u + 1..(i + 1) * n {
                g.add_edge(u, v);
            }
        }
    }
    let b0 = r * n;
    for u in b0..b0 + m {
        for v in u + 1..b0 + m {
            g.add_edge(u, v);
        }
    }
    let mut factors: Vec<Vec<Vec<usize>>> = (0..r)
        .map(|i| subsets((i * n..(i + 1) * n).collect(), n - 1))
        .collect();
    factors.push(subsets((b0..b0 + m).collect(), m0));
    let mut choice = vec![0usize; factors.len()];
    loop {
        let s: Vec<usize> = choice
            .iter()
            .enumerate()
            .flat_map(|(f, &c)| factors[f][c].iter().copied())
            .collect();
        let v = g.add_vertex();
        for u in s {
            g.add_edge(u, v);
        }
        // odometer, last factor fastest
        let mut f = factors.len();
        loop {
            if f == 0 {
                return Ok(g);
            }
            f -= 1;
            choice[f] += 1;
            if choice[f] < factors[f].len() {
                break;
            }
            choice[f] = 0;
        }
    }
}

/// All `k`-subsets of `items` in lexicographic order.
pub fn subsets(items: Vec<usize>, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(&items, k, 0, &mut cur, &mut out);
    out
}

pub fn bowtie() -> Graph {
    complete_triangle(3).expect("K_3 plus triangle is always defined")
}

/// Two triangles sharing vertex `2`, with a path of `n` edges hanging from
/// the non-common vertex `4` of the second triangle.
pub fn two_triangles_path(n: usize) -> Graph {
    let mut g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        .expect("fixed edge list is valid");
    let mut last = 4;
    for _ in 0..n {
        let v = g.add_vertex();
        g.add_edge(last, v);
        last = v;
    }
    g
}

/// `K_n` and a triangle sharing exactly one vertex.
pub fn complete_triangle(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete part needs n >= 1".into()));
    }
    let mut g = complete(n);
    let a = g.add_vertex();
    let b = g.add_vertex();
    g.add_edge(n - 1, a);
    g.add_edge(n - 1, b);
    g.add_edge(a, b);
    Ok(g)
}

/// `K_n` with a path of `k` edges attached at vertex `n - 1`.
pub fn complete_path(n: usize, k: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete part needs n >= 1".into()));
    }
    let mut g = complete(n);
    let mut last = n - 1;
    for _ in 0..k {
        let v = g.add_vertex();
        g.add_edge(last, v);
        last = v;
    }
    Ok(g)
}

/// `K_1 × C_{2n+1}`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("wheel needs n >= 1 (rim C_{2n+1})".into()));
    }
    Ok(join(&complete(1), &cycle(2 * n + 1)?))
}

/// Wheel over an arbitrary rim length; even rims are refused.
pub fn wheel_with_rim(rim: usize) -> Result<Graph> {
    if rim < 3 || rim.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("wheel rim must be an odd cycle, got {rim}")));
    }
    wheel(rim / 2)
}

/// `C_{2m+1} × C_{2n+1}`.
pub fn odd_cycle_join(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameter("odd cycle join needs m, n >= 1".into()));
    }
    Ok(join(&cycle(2 * m + 1)?, &cycle(2 * n + 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::structure::{blocks, chromatic_number};

    #[test]
    fn mycielski() {
        assert_eq!(
            canonical_code(&mycielski_sub(2)).unwrap(),
            canonical_code(&cycle(5).unwrap()).unwrap()
        );
        let m4 = mycielski_sub(4);
        assert_eq!((m4.order(), m4.size()), (9, 6 + 4 + 12));
        assert_eq!(mycielski_sub(0).order(), 1);
        assert!(!mycielski_sub(1).is_connected());
        assert_eq!(chromatic_number(&mycielski_sub(3)), 4);
    }

    #[test]
    fn bouquet() {
        let g = bouquet_star(1, 2, 1).unwrap();
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&cycle(5).unwrap()).unwrap());
        let h = bouquet_star(2, 2, 1).unwrap();
        assert_eq!(h.order(), 9);
        assert_eq!(chromatic_number(&h), 3);
        assert!(bouquet_star(1, 3, 1).is_err());
        assert!(bouquet_star(1, 2, 3).is_err());
        // v_S are independent and adjacent exactly to S
        let s = bouquet_star(1, 3, 2).unwrap();
        assert_eq!(s.order(), 3 + 2 + 3);
        for v in 5..8 {
            assert_eq!(s.degree(v), 4);
            assert!(s.neighbors(v).iter().all(|&w| w < 5));
        }
    }

    #[test]
    fn named() {
        let b = bowtie();
        assert_eq!((b.order(), b.size()), (5, 6));
        assert_eq!(blocks(&b).blocks.len(), 2);
        let t = two_triangles_path(2);
        assert_eq!((t.order(), t.size()), (7, 8));
        assert_eq!(wheel(2).unwrap().size(), 10);
        assert!(wheel_with_rim(6).is_err());
        assert_eq!(complete_path(4, 3).unwrap().order(), 7);
        assert_eq!(subsets(vec![1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn path_attachment_choice_is_immaterial() {
        let t = two_triangles_path(2);
        let mut other = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let a = other.add_vertex();
        let b = other.add_vertex();
        other.add_edge(3, a);
        other.add_edge(a, b);
        assert_eq!(canonical_code(&t).unwrap(), canonical_code(&other).unwrap());
    }
}
