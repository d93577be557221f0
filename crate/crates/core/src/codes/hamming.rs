use super::LinearBlockCode;
use crate::error::{invalid, Result};
use crate::gf2::Gf2Matrix;

/// Systematic Hamming code with `m` parity bits.
///
/// `H = [I_m | Q]` where the columns of `Q` are the `m`-tuples of weight two or
/// more in increasing integer order (row 0 is the most significant bit), and
/// `G = [Qᵀ | I_k]`. The message occupies positions `m..n`.
pub fn hamming_code(m: usize) -> Result<LinearBlockCode> {
    if !(3..=12).contains(&m) {
        return Err(invalid(format!("Hamming parameter m = {m} outside 3..=12")));
    }
    let n = (1usize << m) - 1;
    let k = n - m;
    let columns: Vec<usize> = (1..=n).filter(|v| v.count_ones() >= 2).collect();
    debug_assert_eq!(columns.len(), k);
    let bit = |value: usize, row: usize| (value >> (m - 1 - row)) & 1 == 1;

    let mut h = Gf2Matrix::zeros(m, n);
    let mut g = Gf2Matrix::zeros(k, n);
    for i in 0..m {
        h.set(i, i, true);
    }
    for (j, &col) in columns.iter().enumerate() {
        for i in 0..m {
            h.set(i, m + j, bit(col, i));
            g.set(j, i, bit(col, i));
        }
        g.set(j, m + j, true);
    }
    Ok(LinearBlockCode::new(format!("hamming:m={m}"), g, Some(h))?
        .with_message_positions((m..n).collect()))
}
