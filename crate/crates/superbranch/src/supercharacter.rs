//! Closed-form supercharacter values, degrees and inner products.

use crate::coeff::QMonomial;
use crate::error::{Error, Result};
use crate::setpartition::{arcset, crossing_number, nesting_number, SetPartition};

fn same_ground(a: &SetPartition, b: &SetPartition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::GroundMismatch(a.n(), b.n()));
    }
    Ok(())
}

/// Value of `chi^lambda` on the superclass of `u_mu`.
pub fn char_value(lambda: &SetPartition, mu: &SetPartition) -> Result<QMonomial> {
    same_ground(lambda, mu)?;
    for a in lambda.arcs() {
        if let Some(b) = mu.arc_from(a.left) {
            if b.right < a.right {
                return Ok(QMonomial::ZERO);
            }
        }
        if let Some(b) = mu.arc_into(a.right) {
            if b.left > a.left {
                return Ok(QMonomial::ZERO);
            }
        }
    }
    let common = arcset::intersection(lambda.arcs(), mu.arcs()).len();
    let only = lambda.len() - common;
    let sign = if common % 2 == 0 { 1 } else { -1 };
    let eq = lambda.dim() as i64 - nesting_number(lambda.arcs(), mu.arcs()) as i64;
    QMonomial::new(sign, eq, only as u32)
        .integral(|| format!("chi^{{{lambda}}}(u_{{{mu}}})"))
}

pub fn degree(lambda: &SetPartition) -> QMonomial {
    QMonomial::new(1, lambda.dim() as i64, lambda.len() as u32)
}

/// `<chi^lambda, chi^mu>` from the orthogonality relation.
pub fn inner_product_formula(lambda: &SetPartition, mu: &SetPartition) -> Result<QMonomial> {
    same_ground(lambda, mu)?;
    if lambda != mu {
        return Ok(QMonomial::ZERO);
    }
    let c = crossing_number(lambda.arcs(), lambda.arcs()) as i64;
    Ok(QMonomial::new(1, c, lambda.len() as u32))
}

/// Product of single-arc characters; a cross-check of [`char_value`].
pub fn char_value_by_arcs(lambda: &SetPartition, mu: &SetPartition) -> Result<QMonomial> {
    same_ground(lambda, mu)?;
    let mut v = QMonomial::ONE;
    for a in lambda.arcs() {
        let single = SetPartition::new(lambda.n(), [*a])?;
        v = v * char_value(&single, mu)?;
    }
    Ok(v)
}

/// The superclass representative `u_lambda`: identity plus ones at the arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperclassRep {
    pub partition: SetPartition,
}

impl SuperclassRep {
    pub fn new(partition: SetPartition) -> Self {
        SuperclassRep { partition }
    }

    /// Row-major `n x n` 0/1 matrix.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let n = self.partition.n();
        let mut m = vec![vec![0u8; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for a in self.partition.arcs() {
            m[a.left - 1][a.right - 1] = 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpartition::parse_partition;

    fn sp(text: &str, n: usize) -> SetPartition {
        parse_partition(text, n).unwrap()
    }

    #[test]
    fn value_examples() {
        assert_eq!(char_value(&sp("1-3", 3), &sp("1-2", 3)).unwrap(), QMonomial::ZERO);
        assert_eq!(char_value(&sp("1-3", 3), &sp("2-3", 3)).unwrap(), QMonomial::ZERO);
        assert_eq!(char_value(&sp("1-3", 3), &sp("1-3", 3)).unwrap(), QMonomial::new(-1, 1, 0));
        assert_eq!(char_value(&sp("1-3", 3), &SetPartition::empty(3)).unwrap(), QMonomial::new(1, 1, 1));
        for mu in crate::setpartition::enumerate_partitions(4) {
            assert_eq!(char_value(&SetPartition::empty(4), &mu).unwrap(), QMonomial::ONE);
        }
        assert!(char_value(&sp("1-3", 3), &SetPartition::empty(4)).is_err());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&SetPartition::empty(5)), QMonomial::ONE);
        let l = sp("1-4,2-6,3-5", 6);
        assert_eq!(degree(&l), QMonomial::new(1, 6, 3));
        assert_eq!(degree(&l), char_value(&l, &SetPartition::empty(6)).unwrap());
    }

    #[test]
    fn inner_product_examples() {
        let l = sp("1-4,2-6,3-5", 6);
        assert_eq!(inner_product_formula(&l, &l).unwrap(), QMonomial::new(1, 2, 3));
        assert_eq!(inner_product_formula(&l, &SetPartition::empty(6)).unwrap(), QMonomial::ZERO);
        let e = SetPartition::empty(6);
        assert_eq!(inner_product_formula(&e, &e).unwrap(), QMonomial::ONE);
    }

    #[test]
    fn rep_matrix_has_one_entry_per_row_and_column() {
        let m = SuperclassRep::new(sp("1-3,2-4", 4)).matrix();
        assert_eq!(m[0], vec![1, 0, 1, 0]);
        assert_eq!(m[1], vec![0, 1, 0, 1]);
        assert_eq!(m[3], vec![0, 0, 0, 1]);
    }
}
