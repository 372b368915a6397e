/// A simple 2-graph, produced as the link of a vertex in a 3-graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl LinkGraph {
    pub(crate) fn new(vertices: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        LinkGraph { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(y, z)` with `y < z`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, y: usize, z: usize) -> bool {
        let key = if y < z { (y, z) } else { (z, y) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges.iter().filter(|&&(y, z)| y == u || z == u).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertices).map(|u| self.degree(u)).max().unwrap_or(0)
    }
}
