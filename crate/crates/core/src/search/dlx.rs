//! Dancing-links exact cover with fewest-candidates-first column choice.

pub struct ExactCover {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row_of: Vec<usize>,
    size: Vec<usize>,
    rows: usize,
}

/// First cover found (as option indices in insertion order of the chosen
/// rows) and the number of search nodes visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub solution: Option<Vec<usize>>,
    pub nodes: u64,
}

impl ExactCover {
    /// `items` primary columns, all of which must be covered exactly once.
    pub fn new(items: usize) -> Self {
        let h = items + 1;
        let mut s = Self {
            left: (0..h).map(|i| if i == 0 { items } else { i - 1 }).collect(),
            right: (0..h).map(|i| if i == items { 0 } else { i + 1 }).collect(),
            up: (0..h).collect(),
            down: (0..h).collect(),
            column: (0..h).collect(),
            row_of: vec![usize::MAX; h],
            size: vec![0; h],
            rows: 0,
        };
        if items == 0 {
            s.left[0] = 0;
            s.right[0] = 0;
        }
        s
    }

    /// Adds an option covering the given 0-based items; returns its index.
    pub fn add_option(&mut self, items: &[usize]) -> usize {
        let id = self.rows;
        self.rows += 1;
        let mut first = None;
        for &it in items {
            let c = it + 1;
            let x = self.column.len();
            let above = self.up[c];
            self.column.push(c);
            self.row_of.push(id);
            self.up.push(above);
            self.down.push(c);
            self.down[above] = x;
            self.up[c] = x;
            self.size[c] += 1;
            match first {
                None => {
                    self.left.push(x);
                    self.right.push(x);
                    first = Some(x);
                }
                Some(f) => {
                    let last = self.left[f];
                    self.left.push(last);
                    self.right.push(f);
                    self.right[last] = x;
                    self.left[f] = x;
                }
            }
        }
        id
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                self.size[self.column[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    fn choose(&self) -> usize {
        let mut best = self.right[0];
        let mut c = best;
        while c != 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        best
    }

    fn search(&mut self, sol: &mut Vec<usize>, nodes: &mut u64) -> bool {
        *nodes += 1;
        if self.right[0] == 0 {
            return true;
        }
        let c = self.choose();
        if self.size[c] == 0 {
            return false;
        }
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            sol.push(self.row_of[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            if self.search(sol, nodes) {
                return true;
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            sol.pop();
            r = self.down[r];
        }
        self.uncover(c);
        false
    }

    /// Runs the search until the first cover. Consumes the matrix because a
    /// successful search leaves it partially covered.
    pub fn solve_first(mut self) -> CoverResult {
        let mut sol = Vec::new();
        let mut nodes = 0;
        let found = self.search(&mut sol, &mut nodes);
        CoverResult {
            solution: found.then_some(sol),
            nodes,
        }
    }

    /// Counts every cover.
    pub fn count_all(mut self) -> (u64, u64) {
        let mut nodes = 0;
        let count = self.count(&mut nodes);
        (count, nodes)
    }

    fn count(&mut self, nodes: &mut u64) -> u64 {
        *nodes += 1;
        if self.right[0] == 0 {
            return 1;
        }
        let c = self.choose();
        if self.size[c] == 0 {
            return 0;
        }
        let mut total = 0;
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            total += self.count(nodes);
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            r = self.down[r];
        }
        self.uncover(c);
        total
    }
}
