//! Inline graph specifications.
//!
//! ```text
//! spec  := atom | name "(" args ")"
//! atom  := K<n> | C<n> | P<k> | S<n> | E<n> | bowtie | M<n>
//! name  := Kmn | Gstar | TTP | KnK3 | KnPk | wheel | OCJ | join | sum | amalgam
//! ```
//!
//! `E<n>` is the edgeless graph on `n` vertices. `amalgam(A, va, B, vb)`
//! identifies vertex `va` of `A` with vertex `vb` of `B`. `join` and `sum`
//! take any number of graph arguments.

use crate::constructions::{
    bouquet_star, bowtie, complete_path, complete_triangle, mycielski_sub, odd_cycle_join,
    two_triangles_path, wheel,
};
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, join, vertex_amalgam, Graph};
use crate::standard::{complete, complete_bipartite, cycle, path, star};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let g = p.graph()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

enum Arg {
    Num(usize),
    Graph(Graph),
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Spec(format!("{msg} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn arg(&mut self) -> Result<Arg> {
        self.ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return self.number().map(Arg::Num).ok_or_else(|| self.err("bad number"));
        }
        self.graph().map(Arg::Graph)
    }

    fn args(&mut self) -> Result<Vec<Arg>> {
        self.ws();
        if self.peek() != Some(b'(') {
            return Err(self.err("expected '('"));
        }
        self.pos += 1;
        let mut out = Vec::new();
        loop {
            self.ws();
            if self.peek() == Some(b')') && out.is_empty() {
                self.pos += 1;
                return Ok(out);
            }
            out.push(self.arg()?);
            self.ws();
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected ',' or ')'")),
            }
        }
    }

    fn graph(&mut self) -> Result<Graph> {
        self.ws();
        let name = self.ident();
        if name.is_empty() {
            return Err(self.err("expected a graph name"));
        }
        match name.as_str() {
            "bowtie" => return Ok(bowtie()),
            "Kmn" | "Gstar" | "TTP" | "KnK3" | "KnPk" | "wheel" | "OCJ" | "join" | "sum" | "amalgam" => {}
            _ => {
                let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
                let stem = name[..split].trim_end_matches('_');
                let n: usize = name[split..].parse().map_err(|_| self.err("expected a size"))?;
                return match stem {
                    "K" => Ok(complete(n)),
                    "C" => cycle(n),
                    "P" => Ok(path(n)),
                    "S" => Ok(star(n)),
                    "E" => Ok(Graph::empty(n)),
                    "M" => Ok(mycielski_sub(n)),
                    _ => Err(self.err(&format!("unknown graph family {name:?}"))),
                };
            }
        }
        let args = self.args()?;
        let nums = |want: usize| -> Result<Vec<usize>> {
            if args.len() != want {
                return Err(self.err(&format!("{name} takes {want} numeric arguments")));
            }
            args.iter()
                .map(|a| match a {
                    Arg::Num(n) => Ok(*n),
                    Arg::Graph(_) => Err(self.err(&format!("{name} takes numeric arguments"))),
                })
                .collect()
        };
        let graphs = || -> Result<Vec<&Graph>> {
            args.iter()
                .map(|a| match a {
                    Arg::Graph(g) => Ok(g),
                    Arg::Num(_) => Err(self.err(&format!("{name} takes graph arguments"))),
                })
                .collect()
        };
        match name.as_str() {
            "Kmn" => {
                let v = nums(2)?;
                Ok(complete_bipartite(v[0], v[1]))
            }
            "Gstar" => {
                let v = nums(3)?;
                bouquet_star(v[0], v[1], v[2])
            }
            "TTP" => Ok(two_triangles_path(nums(1)?[0])),
            "KnK3" => complete_triangle(nums(1)?[0]),
            "KnPk" => {
                let v = nums(2)?;
                complete_path(v[0], v[1])
            }
            "wheel" => wheel(nums(1)?[0]),
            "OCJ" => {
                let v = nums(2)?;
                odd_cycle_join(v[0], v[1])
            }
            "join" => Ok(graphs()?
                .into_iter()
                .fold(Graph::empty(0), |acc, g| join(&acc, g))),
            "sum" => Ok(graphs()?
                .into_iter()
                .fold(Graph::empty(0), |acc, g| disjoint_union(&acc, g))),
            "amalgam" => match args.as_slice() {
                [Arg::Graph(a), Arg::Num(va), Arg::Graph(b), Arg::Num(vb)] => vertex_amalgam(a, *va, b, *vb),
                _ => Err(self.err("amalgam takes (graph, vertex, graph, vertex)")),
            },
            _ => unreachable!("names filtered above"),
        }
    }
}
