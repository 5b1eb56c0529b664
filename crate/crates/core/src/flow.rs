//! Dinic's max-flow on small integer-capacity networks.

pub(crate) const INF: usize = usize::MAX / 2;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: usize,
}

pub(crate) struct FlowNetwork {
    n: usize,
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            n,
            arcs: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Directed arc u -> v with the given capacity (reverse capacity 0).
    pub fn add_arc(&mut self, u: usize, v: usize, cap: usize) {
        let id = self.arcs.len();
        self.arcs.push(Arc { to: v, cap });
        self.arcs.push(Arc { to: u, cap: 0 });
        self.adj[u].push(id);
        self.adj[v].push(id + 1);
    }

    /// Undirected unit edge: capacity `cap` in both directions.
    pub fn add_undirected(&mut self, u: usize, v: usize, cap: usize) {
        self.add_arc(u, v, cap);
        self.add_arc(v, u, cap);
    }

    /// Max-flow that may stop early once `cap` units are routed: callers
    /// minimizing over many terminal pairs only need exact values below
    /// their current best.
    pub fn max_flow_capped(&mut self, s: usize, t: usize, cap: usize) -> usize {
        assert!(s != t);
        let mut flow = 0;
        while flow < cap {
            let level = self.bfs_levels(s, t);
            if level[t] == usize::MAX {
                return flow;
            }
            let mut iter = vec![0usize; self.n];
            loop {
                let pushed = self.dfs_push(s, t, INF, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= cap {
                    return flow;
                }
            }
        }
        flow
    }

    fn bfs_levels(&self, s: usize, t: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        level[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &a in &self.adj[u] {
                let arc = self.arcs[a];
                if arc.cap > 0 && level[arc.to] == usize::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        level
    }

    fn dfs_push(
        &mut self,
        u: usize,
        t: usize,
        limit: usize,
        level: &[usize],
        iter: &mut [usize],
    ) -> usize {
        if u == t {
            return limit;
        }
        while iter[u] < self.adj[u].len() {
            let a = self.adj[u][iter[u]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.dfs_push(to, t, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square() {
        // s=0, t=3, two disjoint paths.
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(0, 2, 1);
        net.add_arc(2, 3, 1);
        assert_eq!(net.max_flow_capped(0, 3, INF), 2);
    }

    #[test]
    fn bottleneck() {
        let mut net = FlowNetwork::new(3);
        net.add_arc(0, 1, 5);
        net.add_arc(1, 2, 2);
        assert_eq!(net.max_flow_capped(0, 2, INF), 2);
    }

    #[test]
    fn undirected_edge_counts_once_per_direction() {
        let mut net = FlowNetwork::new(2);
        net.add_undirected(0, 1, 1);
        assert_eq!(net.max_flow_capped(0, 1, INF), 1);
    }
}
