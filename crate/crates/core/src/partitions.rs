//! Exhaustive generation of Ferrers boards.

use crate::board::FerrersBoard;

/// All Ferrers boards with exactly `cells` cells and no zero columns, in
/// lexicographic order of their column vectors.
pub fn partitions_of(cells: u32) -> Vec<FerrersBoard> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(cells, 1, &mut current, &mut out);
    out.sort();
    out
}

fn extend_partitions(remaining: u32, min_part: u32, current: &mut Vec<u32>, out: &mut Vec<FerrersBoard>) {
    if remaining == 0 {
        out.push(FerrersBoard::new(current.clone()).expect("parts are generated in weakly increasing order"));
        return;
    }
    for part in min_part..=remaining {
        if remaining - part != 0 && remaining - part < part {
            // the rest would need a smaller part
            continue;
        }
        current.push(part);
        extend_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Every board with at most `max_cells` cells, smallest first.
pub fn boards_up_to(max_cells: u32) -> Vec<FerrersBoard> {
    (0..=max_cells).flat_map(partitions_of).collect()
}

/// All boards `(b_0, ..., b_{n-1})` with `b_0 = 0` and `b_j <= jm`, i.e. the boards inside
/// the triangular board with `n` columns. Each is returned padded to `n` columns.
pub fn boards_in_triangle(n: usize, m: u32) -> Vec<FerrersBoard> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = vec![0u32];
    extend_triangle(n, m, &mut current, &mut out);
    out
}

fn extend_triangle(n: usize, m: u32, current: &mut Vec<u32>, out: &mut Vec<FerrersBoard>) {
    if current.len() == n {
        out.push(FerrersBoard::new(current.clone()).expect("weakly increasing by construction"));
        return;
    }
    let j = current.len() as u32;
    let low = *current.last().unwrap();
    for b in low..=j * m {
        current.push(b);
        extend_triangle(n, m, current, out);
        current.pop();
    }
}

/// All boards with at most `columns` columns and heights at most `height`, trimmed.
pub fn boards_in_rectangle(columns: usize, height: u32) -> Vec<FerrersBoard> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_rectangle(columns, height, 0, &mut current, &mut out);
    out.into_iter().map(|b| b.trim()).collect()
}

fn extend_rectangle(columns: usize, height: u32, low: u32, current: &mut Vec<u32>, out: &mut Vec<FerrersBoard>) {
    if current.len() == columns {
        out.push(FerrersBoard::new(current.clone()).expect("weakly increasing by construction"));
        return;
    }
    for b in low..=height {
        current.push(b);
        extend_rectangle(columns, height, b, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for board in partitions_of(7) {
            assert_eq!(board.cell_count(), 7);
            assert!(board.columns().iter().all(|&b| b > 0));
        }
    }

    #[test]
    fn triangle_counts_are_fuss_catalan() {
        // C_{n,m} = binom((m+1)n, n) / (mn + 1)
        assert_eq!(boards_in_triangle(3, 1).len(), 5);
        assert_eq!(boards_in_triangle(4, 1).len(), 14);
        assert_eq!(boards_in_triangle(3, 2).len(), 12);
        assert_eq!(boards_in_triangle(4, 2).len(), 55);
        assert_eq!(boards_in_triangle(1, 3).len(), 1);
    }

    #[test]
    fn rectangle_count() {
        // binom(c + h, c)
        assert_eq!(boards_in_rectangle(3, 2).len(), 10);
        assert_eq!(boards_in_rectangle(2, 6).len(), 28);
    }
}
