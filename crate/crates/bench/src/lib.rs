//! Inputs shared by the criterion benches.

use splitsig::{build_gss, ConwayForm, GeneralizedSeifertSystem};

/// `C(2,1,2,1,...,2)` with `clasps` clasps: a tridiagonal system of rank
/// `clasps - 1`.
pub fn chain_system(clasps: u32) -> GeneralizedSeifertSystem {
    let a = vec![1; clasps as usize];
    let b = vec![1; clasps as usize - 1];
    build_gss(&ConwayForm::from_ab(&a, &b).expect("valid form")).expect("valid system")
}

/// Symmetric integer matrix with a fixed pseudo-random fill in `[-9, 9]`.
pub fn dense_symmetric(n: usize) -> Vec<Vec<i64>> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut m = vec![vec![0i64; n]; n];
    for j in 0..n {
        for k in j..n {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let v = ((state >> 33) % 19) as i64 - 9;
            m[j][k] = v;
            m[k][j] = v;
        }
    }
    m
}
