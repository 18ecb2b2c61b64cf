//! Planar diagrams of two-bridge knots.
//!
//! A word is drawn as a rational tangle: starting from the `[0]` or `[∞]`
//! tangle, horizontal twists are added on the right for even positions and
//! vertical twists below for odd positions, innermost entry first, and the
//! result is closed by joining NW to NE and SW to SE. A tangle of fraction
//! `p/q` closes to the two-bridge link `b(p, q)`.
//!
//! Crossing slots are numbered counter-clockwise from the lower-left corner:
//! `0 = LL, 1 = LR, 2 = UR, 3 = UL`. A `+1` twist puts the `UL-LR` strand
//! over, a `-1` twist the `LL-UR` strand; the same rule in both twist
//! directions keeps `[1]` and `1/[1]` the same tangle.

use std::collections::HashMap;
use std::fmt;

use crate::conway::{evaluate, Convention, ConwayWord};
use crate::error::{Error, Result};
use num_integer::Integer;

/// One crossing of a Wirtinger presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

/// An oriented diagram: PD code, Wirtinger arcs and component count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pd: Vec<[usize; 4]>,
    /// Per crossing: over strand enters at slot 3 and leaves at slot 1.
    over_from_l: Vec<bool>,
    crossings: Vec<Crossing>,
    arcs: usize,
    components: usize,
}

impl Diagram {
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arcs(&self) -> usize {
        self.arcs
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn pd(&self) -> &[[usize; 4]] {
        &self.pd
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// PD code with orientation recovered from the labels, as produced by
    /// [`Diagram::to_pd_string`] or external knot software: `(i, j, k, l)`
    /// lists the incoming under-edge first and proceeds counter-clockwise,
    /// and labels increase along each component.
    pub fn from_pd(pd: Vec<[usize; 4]>) -> Result<Diagram> {
        let over_from_l = orient_over_strands(&pd)?;
        Self::from_oriented_pd(pd, over_from_l, 0)
    }

    pub fn parse_pd(s: &str) -> Result<Diagram> {
        Self::from_pd(parse_pd_text(s)?)
    }

    fn from_oriented_pd(pd: Vec<[usize; 4]>, over_from_l: Vec<bool>, free_loops: usize) -> Result<Diagram> {
        // head[label] = (crossing, slot) where the edge enters a crossing
        let mut head: HashMap<usize, (usize, usize)> = HashMap::new();
        let mut tails: HashMap<usize, usize> = HashMap::new();
        for (x, tuple) in pd.iter().enumerate() {
            let (h_over, t_over) = if over_from_l[x] { (3, 1) } else { (1, 3) };
            for s in [0, h_over] {
                if head.insert(tuple[s], (x, s)).is_some() {
                    return Err(Error::Invalid(format!("edge {} enters two crossings", tuple[s])));
                }
            }
            for s in [2, t_over] {
                *tails.entry(tuple[s]).or_default() += 1;
            }
        }
        if head.len() != tails.len() || tails.values().any(|&n| n != 1) || head.keys().any(|e| !tails.contains_key(e)) {
            return Err(Error::Invalid("every edge must leave one crossing and enter one".into()));
        }

        let mut labels: Vec<usize> = head.keys().copied().collect();
        labels.sort_unstable();
        let mut arc_of: HashMap<usize, usize> = HashMap::new();
        let mut arcs = 0;
        let mut cycles = 0;
        for &start in &labels {
            if arc_of.contains_key(&start) {
                continue;
            }
            cycles += 1;
            let mut cycle = vec![start];
            loop {
                let (x, s) = head[cycle.last().unwrap()];
                let next = pd[x][(s + 2) % 4];
                if next == start {
                    break;
                }
                cycle.push(next);
            }
            match cycle.iter().position(|e| head[e].1 == 0) {
                None => {
                    for e in cycle {
                        arc_of.insert(e, arcs);
                    }
                    arcs += 1;
                }
                Some(k) => {
                    let n = cycle.len();
                    for step in 0..n {
                        let e = cycle[(k + 1 + step) % n];
                        arc_of.insert(e, arcs);
                        if head[&e].1 == 0 {
                            arcs += 1;
                        }
                    }
                }
            }
        }

        let crossings = pd
            .iter()
            .zip(&over_from_l)
            .map(|(t, &from_l)| Crossing {
                over: arc_of[&t[1]],
                under_in: arc_of[&t[0]],
                under_out: arc_of[&t[2]],
                sign: if from_l { 1 } else { -1 },
            })
            .collect();
        Ok(Diagram {
            pd,
            over_from_l,
            crossings,
            arcs,
            components: cycles + free_loops,
        })
    }

    pub fn to_pd_string(&self) -> String {
        let parts: Vec<String> = self
            .pd
            .iter()
            .map(|t| format!("X[{},{},{},{}]", t[0], t[1], t[2], t[3]))
            .collect();
        format!("PD[{}]", parts.join(", "))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Recovers over-strand directions from label order, using the fixed under
/// directions first and falling back to the successor rule.
fn orient_over_strands(pd: &[[usize; 4]]) -> Result<Vec<bool>> {
    let mut occurrences: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (x, t) in pd.iter().enumerate() {
        for (s, &e) in t.iter().enumerate() {
            occurrences.entry(e).or_default().push((x, s));
        }
    }
    if occurrences.values().any(|v| v.len() != 2) {
        return Err(Error::Invalid("every PD label must occur exactly twice".into()));
    }
    // is_head[(x, s)] for over slots; under slots are fixed.
    let mut over: Vec<Option<bool>> = vec![None; pd.len()];
    let is_head = |over: &[Option<bool>], x: usize, s: usize| -> Option<bool> {
        match s {
            0 => Some(true),
            2 => Some(false),
            1 => over[x].map(|from_l| !from_l),
            _ => over[x],
        }
    };
    loop {
        let mut changed = false;
        for occ in occurrences.values() {
            let (a, b) = (occ[0], occ[1]);
            match (is_head(&over, a.0, a.1), is_head(&over, b.0, b.1)) {
                (Some(ha), None) => {
                    set_over(&mut over, b, !ha);
                    changed = true;
                }
                (None, Some(hb)) => {
                    set_over(&mut over, a, !hb);
                    changed = true;
                }
                (Some(ha), Some(hb)) if ha == hb => {
                    return Err(Error::Invalid("inconsistent PD orientation".into()));
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    // Components without under-passes: labels increase along orientation.
    let component_bounds = label_components(pd);
    for x in 0..pd.len() {
        if over[x].is_none() {
            let (j, l) = (pd[x][1], pd[x][3]);
            let (lo, hi) = component_bounds[&j];
            let next = |e: usize| if e == hi { lo } else { e + 1 };
            over[x] = Some(next(l) == j);
        }
    }
    Ok(over.into_iter().map(|o| o.unwrap()).collect())
}

fn set_over(over: &mut [Option<bool>], (x, s): (usize, usize), head: bool) {
    // slot 3 entering means the strand runs l -> j
    over[x] = Some(if s == 3 { head } else { !head });
}

fn label_components(pd: &[[usize; 4]]) -> HashMap<usize, (usize, usize)> {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    fn find(parent: &mut HashMap<usize, usize>, e: usize) -> usize {
        let p = *parent.entry(e).or_insert(e);
        if p == e {
            return e;
        }
        let r = find(parent, p);
        parent.insert(e, r);
        r
    }
    for t in pd {
        for (a, b) in [(t[0], t[2]), (t[1], t[3])] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra, rb);
            }
        }
    }
    let labels: Vec<usize> = parent.keys().copied().collect();
    let mut bounds: HashMap<usize, (usize, usize)> = HashMap::new();
    for &e in &labels {
        let r = find(&mut parent, e);
        let b = bounds.entry(r).or_insert((e, e));
        b.0 = b.0.min(e);
        b.1 = b.1.max(e);
    }
    labels
        .into_iter()
        .map(|e| {
            let r = find(&mut parent, e);
            (e, bounds[&r])
        })
        .collect()
}

fn parse_pd_text(s: &str) -> Result<Vec<[usize; 4]>> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let (body, base) = match t.strip_prefix("PD[").and_then(|b| b.strip_suffix(']')) {
        Some(b) => (b, lead + 3),
        None => (t, lead),
    };
    let mut out = Vec::new();
    let mut consumed = 0;
    while let Some(start) = body[consumed..].find("X[") {
        let at = base + consumed + start;
        let open = consumed + start + 2;
        let close = body[open..]
            .find(']')
            .ok_or_else(|| Error::parse(at, "unterminated X[...]"))?
            + open;
        let nums: Vec<usize> = body[open..close]
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(at, "bad PD label"))?;
        if nums.len() != 4 {
            return Err(Error::parse(at, "a crossing has four labels"));
        }
        out.push([nums[0], nums[1], nums[2], nums[3]]);
        consumed = close + 1;
    }
    if out.is_empty() && !body.trim().is_empty() {
        return Err(Error::parse(base, "expected X[i,j,k,l] entries"));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Port { crossing: usize, slot: usize },
    Terminal,
}

/// Four-valent graph under construction: crossing ports have one neighbour,
/// pass-through terminals two.
#[derive(Default)]
struct TangleGraph {
    nodes: Vec<Node>,
    adj: Vec<Vec<usize>>,
    ports: Vec<[usize; 4]>,
    over_pair: Vec<usize>,
}

#[derive(Clone, Copy)]
struct Ends {
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
}

const LL: usize = 0;
const LR: usize = 1;
const UR: usize = 2;
const UL: usize = 3;

impl TangleGraph {
    fn node(&mut self, n: Node) -> usize {
        self.nodes.push(n);
        self.adj.push(Vec::new());
        self.nodes.len() - 1
    }

    fn connect(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn crossing(&mut self, positive: bool) -> usize {
        let c = self.ports.len();
        let mut ports = [0; 4];
        for (slot, p) in ports.iter_mut().enumerate() {
            *p = self.node(Node::Port { crossing: c, slot });
        }
        self.ports.push(ports);
        // pair k is the strand through slots k and k + 2
        self.over_pair.push(if positive { 1 } else { 0 });
        c
    }

    fn start(&mut self, infinity: bool) -> Ends {
        let [nw, ne, sw, se] = [0; 4].map(|_| self.node(Node::Terminal));
        if infinity {
            self.connect(nw, sw);
            self.connect(ne, se);
        } else {
            self.connect(nw, ne);
            self.connect(sw, se);
        }
        Ends { nw, ne, sw, se }
    }

    fn horizontal(&mut self, t: &mut Ends, positive: bool) {
        let c = self.crossing(positive);
        let p = self.ports[c];
        self.connect(t.ne, p[UL]);
        self.connect(t.se, p[LL]);
        t.ne = p[UR];
        t.se = p[LR];
    }

    fn vertical(&mut self, t: &mut Ends, positive: bool) {
        let c = self.crossing(positive);
        let p = self.ports[c];
        self.connect(t.sw, p[UL]);
        self.connect(t.se, p[UR]);
        t.sw = p[LL];
        t.se = p[LR];
    }

    /// Follows the diagram from a port through terminals to the next port.
    fn partner(&self, port: usize, seen: &mut [bool]) -> usize {
        let (mut prev, mut cur) = (port, self.adj[port][0]);
        while self.nodes[cur] == Node::Terminal {
            seen[cur] = true;
            let next = if self.adj[cur][0] == prev { self.adj[cur][1] } else { self.adj[cur][0] };
            prev = cur;
            cur = next;
        }
        cur
    }

    fn into_diagram(self) -> Diagram {
        let n = self.ports.len();
        let mut seen = vec![false; self.nodes.len()];
        let mut visited = vec![[false; 2]; n];
        // per crossing and slot: edge label there
        let mut slot_edge = vec![[0usize; 4]; n];
        let mut under_entry = vec![0usize; n];
        let mut over_entry = vec![0usize; n];
        let mut label = 0;
        for c0 in 0..n {
            for pair in 0..2 {
                if visited[c0][pair] {
                    continue;
                }
                let mut passes = Vec::new();
                let (mut c, mut s) = (c0, pair);
                while !visited[c][s % 2] {
                    visited[c][s % 2] = true;
                    passes.push((c, s));
                    let exit = self.ports[c][(s + 2) % 4];
                    match self.nodes[self.partner(exit, &mut seen)] {
                        Node::Port { crossing, slot } => {
                            c = crossing;
                            s = slot;
                        }
                        Node::Terminal => unreachable!(),
                    }
                }
                let len = passes.len();
                for (k, &(c, s)) in passes.iter().enumerate() {
                    let incoming = label + if k == 0 { len } else { k };
                    let outgoing = label + k + 1;
                    slot_edge[c][s] = incoming;
                    slot_edge[c][(s + 2) % 4] = outgoing;
                    if s % 2 == self.over_pair[c] {
                        over_entry[c] = s;
                    } else {
                        under_entry[c] = s;
                    }
                }
                label += len;
            }
        }
        // closed loops that never meet a crossing
        let mut free_loops = 0;
        for start in 0..self.nodes.len() {
            if self.nodes[start] != Node::Terminal || seen[start] {
                continue;
            }
            free_loops += 1;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                stack.extend(self.adj[v].iter().copied().filter(|&w| !seen[w]));
            }
        }
        let mut pd = Vec::with_capacity(n);
        let mut over_from_l = Vec::with_capacity(n);
        for c in 0..n {
            let u = under_entry[c];
            pd.push([0, 1, 2, 3].map(|k| slot_edge[c][(u + k) % 4]));
            over_from_l.push(over_entry[c] == (u + 3) % 4);
        }
        Diagram::from_oriented_pd(pd, over_from_l, free_loops).expect("template diagram is well formed")
    }
}

/// Closure of the rational tangle of `word`, knot or link alike.
pub fn tangle_closure(word: &ConwayWord) -> Diagram {
    let plus = word.with_convention(Convention::Plus);
    let entries = plus.entries();
    let mut g = TangleGraph::default();
    let last = entries.len().saturating_sub(1);
    let mut t = g.start(last % 2 == 1);
    for (i, &a) in entries.iter().enumerate().rev() {
        for _ in 0..a.unsigned_abs() {
            if i % 2 == 0 {
                g.horizontal(&mut t, a > 0);
            } else {
                g.vertical(&mut t, a > 0);
            }
        }
    }
    g.connect(t.nw, t.ne);
    g.connect(t.sw, t.se);
    g.into_diagram()
}

/// Diagram of the two-bridge knot named by a reduced word; links are
/// rejected.
pub fn diagram_from_word(word: &ConwayWord) -> Result<Diagram> {
    word.require_reduced()?;
    let value = evaluate(word);
    if value.numerator().is_even() {
        return Err(Error::NotKnot(value.numerator().to_string()));
    }
    Ok(tangle_closure(word))
}
