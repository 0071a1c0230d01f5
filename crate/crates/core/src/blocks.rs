//! Splitting a quadratic form into independent blocks: connected components
//! of the graph whose edges are the nonzero off-diagonal entries. The form is
//! PSD iff each principal block is.

use num_traits::Zero;

use crate::forms::SymQForm;

/// Index sets of the connected components, each sorted ascending, blocks
/// ordered by their smallest index.
pub fn block_decompose(q: &SymQForm) -> Vec<Vec<usize>> {
    let n = q.dim();
    let mut comp = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && comp[j] == usize::MAX && !q.matrix[i][j].is_zero() {
                    comp[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    blocks
}

/// Principal sub-forms for each block.
pub fn split(q: &SymQForm) -> Vec<(Vec<usize>, SymQForm)> {
    block_decompose(q)
        .into_iter()
        .map(|idx| {
            let sub = q.principal(&idx);
            (idx, sub)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{long_form, Label};
    use crate::rational::int;

    #[test]
    fn diagonal_gives_singletons() {
        let basis = (0..4).map(|i| Label::Var((b'a' + i) as char)).collect();
        let mut q = SymQForm::zeros(basis);
        for i in 0..4 {
            q.matrix[i][i] = int(i as i64 + 1);
        }
        assert_eq!(
            block_decompose(&q),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn chain_is_one_block() {
        let basis = (0..3).map(|i| Label::Var((b'a' + i) as char)).collect();
        let mut q = SymQForm::zeros(basis);
        q.matrix[0][2] = int(1);
        q.matrix[2][0] = int(1);
        assert_eq!(block_decompose(&q), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn degree_three_splits_into_four_tens() {
        let q = long_form(3);
        let blocks = block_decompose(&q);
        let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![10, 10, 10, 10]);
        let all: std::collections::BTreeSet<usize> = blocks.into_iter().flatten().collect();
        assert_eq!(all.len(), 40);
    }
}
