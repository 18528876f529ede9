//! Inputs shared by the benchmarks.

use hyperlattice::LatinSquare;

/// The addition table of `Z_n`, shifted to symbols `1..=n`.
pub fn cyclic_square(n: usize) -> LatinSquare {
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n + 1).collect()).collect();
    LatinSquare::from_rows(&rows).expect("cyclic tables are Latin")
}

/// The cyclic square with rows taken in reverse order.
pub fn reversed_cyclic_square(n: usize) -> LatinSquare {
    let rows: Vec<Vec<usize>> = (0..n).rev().map(|i| (0..n).map(|j| (i + j) % n + 1).collect()).collect();
    LatinSquare::from_rows(&rows).expect("row permutations keep squares Latin")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_latin() {
        for n in 1..=9 {
            assert_eq!(cyclic_square(n).order(), n);
            assert_eq!(reversed_cyclic_square(n).order(), n);
        }
    }
}
