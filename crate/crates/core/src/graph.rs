//! Minimal undirected graph abstraction shared by the honeycomb and the
//! baseline families (paths, cycles, complete graphs).

/// Read-only view of a simple undirected graph with indexed edges.
pub trait GraphView {
    fn vertex_count(&self) -> usize;

    /// Edges as `(u, v)` with `u < v`, indexed by position.
    fn edges(&self) -> &[(usize, usize)];

    fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Incident `(neighbour, edge index)` pairs for every vertex, in edge order.
    fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    fn degree(&self, v: usize) -> usize {
        self.edges()
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Two-colouring if the graph is bipartite.
    fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.incidence();
        let mut colour = vec![u8::MAX; self.vertex_count()];
        let mut stack = Vec::new();
        for s in 0..self.vertex_count() {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &(w, _) in &adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        stack.push(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }
}

/// Plain edge-list graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    name: String,
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list; endpoints are normalised and the list sorted.
    pub fn new(name: impl Into<String>, vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b && a < vertices && b < vertices, "bad edge ({a},{b})");
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        SimpleGraph { name: name.into(), vertices, edges }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Path with `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::new(format!("P_{n}"), n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle with `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Self::new(format!("C_{n}"), n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::new(format!("K_{n}"), n, edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Self::new(format!("K_{{{a},{b}}}"), a + b, edges)
    }
}

impl GraphView for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.vertices
    }

    fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}
