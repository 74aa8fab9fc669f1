use super::{Graph, VertexSet};

impl Graph {
    /// Vertex sets of the biconnected blocks that contain a cycle. Every hole, together
    /// with every vertex having two non-adjacent neighbours on it, lies inside one of them.
    pub fn cyclic_blocks(&self) -> Vec<VertexSet> {
        let mut st = State { disc: vec![usize::MAX; self.n()], low: vec![0; self.n()], time: 0, stack: Vec::new(), out: Vec::new() };
        for v in 0..self.n() {
            if st.disc[v] == usize::MAX {
                dfs(self, v, usize::MAX, &mut st);
            }
        }
        st.out
    }
}

struct State {
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    out: Vec<VertexSet>,
}

fn dfs(g: &Graph, u: usize, parent: usize, st: &mut State) {
    st.disc[u] = st.time;
    st.low[u] = st.time;
    st.time += 1;
    for v in g.neighbors(u) {
        if st.disc[v] == usize::MAX {
            st.stack.push((u, v));
            dfs(g, v, u, st);
            st.low[u] = st.low[u].min(st.low[v]);
            if st.low[v] >= st.disc[u] {
                let mut block = VertexSet::new();
                let mut edges = 0;
                while let Some((a, b)) = st.stack.pop() {
                    block.insert(a);
                    block.insert(b);
                    edges += 1;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                if edges >= block.len() {
                    st.out.push(block);
                }
            }
        } else if v != parent && st.disc[v] < st.disc[u] {
            st.stack.push((u, v));
            st.low[u] = st.low[u].min(st.disc[v]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forests_have_no_cyclic_blocks() {
        assert!(Graph::path(6).cyclic_blocks().is_empty());
        assert_eq!(Graph::cycle(7).cyclic_blocks(), vec![VertexSet::full(7)]);
    }

    #[test]
    fn two_cycles_sharing_a_vertex() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2), (5, 6)]).unwrap();
        let mut blocks: Vec<Vec<usize>> = g.cyclic_blocks().iter().map(|b| b.to_vec()).collect();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![2, 3, 4, 5]]);
    }
}
