//! Min-cost circulation with lower bounds.
//!
//! Lower bounds are moved into node excesses; the remaining problem is solved
//! by successive shortest paths (Dijkstra with potentials) between a super
//! source and a super sink.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: i64,
    cost: i64,
    rev: usize,
}

#[derive(Debug, Clone, Copy)]
struct ArcSpec {
    from: usize,
    to: usize,
    lower: i64,
    upper: i64,
    cost: i64,
}

/// Network with integer capacities, lower bounds and nonnegative costs.
#[derive(Debug, Clone, Default)]
pub struct FlowNetwork {
    nodes: usize,
    arcs: Vec<ArcSpec>,
}

/// Flow on every arc, in insertion order, plus the total cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circulation {
    pub cost: i64,
    pub flow: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            nodes,
            arcs: Vec::new(),
        }
    }

    /// Adds an arc and returns its id.
    pub fn add_arc(&mut self, from: usize, to: usize, lower: i64, upper: i64, cost: i64) -> usize {
        assert!(from < self.nodes && to < self.nodes);
        assert!(0 <= lower && lower <= upper, "need 0 <= lower <= upper");
        assert!(cost >= 0, "costs must be nonnegative");
        self.arcs.push(ArcSpec {
            from,
            to,
            lower,
            upper,
            cost,
        });
        self.arcs.len() - 1
    }

    /// Minimum-cost feasible circulation, or `None` if the bounds admit none.
    pub fn min_cost_circulation(&self) -> Option<Circulation> {
        let s = self.nodes;
        let t = self.nodes + 1;
        let total = self.nodes + 2;
        let mut g: Vec<Vec<Edge>> = vec![Vec::new(); total];
        let mut excess = vec![0i64; self.nodes];
        let mut handles = Vec::with_capacity(self.arcs.len());
        for a in &self.arcs {
            handles.push(push_edge(&mut g, a.from, a.to, a.upper - a.lower, a.cost));
            excess[a.to] += a.lower;
            excess[a.from] -= a.lower;
        }
        let mut need = 0;
        for (v, &e) in excess.iter().enumerate() {
            if e > 0 {
                push_edge(&mut g, s, v, e, 0);
                need += e;
            } else if e < 0 {
                push_edge(&mut g, v, t, -e, 0);
            }
        }
        let (sent, _) = ssp(&mut g, s, t, need);
        if sent < need {
            return None;
        }
        let mut cost = 0;
        let flow: Vec<i64> = self
            .arcs
            .iter()
            .zip(&handles)
            .map(|(a, &(u, i))| {
                let f = a.lower + (a.upper - a.lower - g[u][i].cap);
                cost += f * a.cost;
                f
            })
            .collect();
        Some(Circulation { cost, flow })
    }
}

fn push_edge(g: &mut [Vec<Edge>], u: usize, v: usize, cap: i64, cost: i64) -> (usize, usize) {
    let iu = g[u].len();
    let iv = g[v].len() + usize::from(u == v);
    g[u].push(Edge {
        to: v,
        cap,
        cost,
        rev: iv,
    });
    g[v].push(Edge {
        to: u,
        cap: 0,
        cost: -cost,
        rev: iu,
    });
    (u, iu)
}

/// Successive shortest paths; returns (flow sent, cost).
fn ssp(g: &mut [Vec<Edge>], s: usize, t: usize, limit: i64) -> (i64, i64) {
    let n = g.len();
    let mut pot = vec![0i64; n];
    let mut sent = 0;
    let mut cost = 0;
    let inf = i64::MAX / 4;
    while sent < limit {
        let mut dist = vec![inf; n];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        dist[s] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, s)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for (i, e) in g[u].iter().enumerate() {
                if e.cap <= 0 {
                    continue;
                }
                let nd = d + e.cost + pot[u] - pot[e.to];
                if nd < dist[e.to] {
                    dist[e.to] = nd;
                    prev[e.to] = Some((u, i));
                    heap.push(Reverse((nd, e.to)));
                }
            }
        }
        if dist[t] >= inf {
            break;
        }
        for v in 0..n {
            if dist[v] < inf {
                pot[v] += dist[v];
            }
        }
        let mut push = limit - sent;
        let mut v = t;
        while let Some((u, i)) = prev[v] {
            push = push.min(g[u][i].cap);
            v = u;
        }
        let mut v = t;
        while let Some((u, i)) = prev[v] {
            let rev = g[u][i].rev;
            g[u][i].cap -= push;
            g[v][rev].cap += push;
            cost += push * g[u][i].cost;
            v = u;
        }
        sent += push;
    }
    (sent, cost)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_transport() {
        // s=0 -> a=1, b=2 -> t=3, t->s fixed at 2
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 0, 1, 0);
        net.add_arc(0, 2, 0, 2, 0);
        net.add_arc(1, 3, 0, 2, 5);
        net.add_arc(2, 3, 0, 2, 1);
        net.add_arc(3, 0, 2, 2, 0);
        let c = net.min_cost_circulation().unwrap();
        assert_eq!(c.cost, 2);
        assert_eq!(c.flow[1], 2);
    }

    #[test]
    fn lower_bound_forces_expensive_arc() {
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 1, 1, 0);
        net.add_arc(0, 2, 0, 2, 0);
        net.add_arc(1, 3, 0, 2, 5);
        net.add_arc(2, 3, 0, 2, 1);
        net.add_arc(3, 0, 2, 2, 0);
        assert_eq!(net.min_cost_circulation().unwrap().cost, 6);
    }

    #[test]
    fn infeasible_bounds() {
        let mut net = FlowNetwork::new(2);
        net.add_arc(0, 1, 3, 3, 0);
        net.add_arc(1, 0, 0, 2, 0);
        assert!(net.min_cost_circulation().is_none());
    }
}
