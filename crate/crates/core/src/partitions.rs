//! Integer partitions and the hook length formula.

/// All partitions of `n` with parts in weakly decreasing order.
///
/// The list is ordered first-part-major: `[n]` comes first and `[1, 1, ..., 1]`
/// last, matching the usual reverse lexicographic convention. `partitions(0)`
/// is the single empty partition.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen(n, n, &mut prefix, &mut out);
    out
}

fn gen(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    let mut part = max.min(n);
    while part >= 1 {
        prefix.push(part);
        gen(n - part, part, prefix, out);
        prefix.pop();
        part -= 1;
    }
}

/// Number of partitions of `n`, counted by direct enumeration elsewhere but
/// cheap enough to expose as a table here.
pub fn partition_count(n: u32) -> u64 {
    // Euler's pentagonal recurrence would be overkill for the sizes used in
    // this crate; a dense two-variable table is simpler to audit.
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// Dimension of the irreducible symmetric group representation labelled by
/// `lambda`, via the hook length formula: n! divided by the product of all
/// hook lengths.
pub fn hook_length_degree(lambda: &[u32]) -> u128 {
    let n: u32 = lambda.iter().sum();
    if n == 0 {
        return 1;
    }
    let conj = conjugate(lambda);
    let mut numerator: u128 = 1;
    for k in 1..=n as u128 {
        numerator *= k;
    }
    let mut denominator: u128 = 1;
    for (r, &row_len) in lambda.iter().enumerate() {
        for c in 0..row_len as usize {
            let arm = row_len as u128 - c as u128 - 1;
            let leg = conj[c] as u128 - r as u128 - 1;
            denominator *= arm + leg + 1;
        }
    }
    debug_assert_eq!(numerator % denominator, 0);
    numerator / denominator
}

/// Conjugate (transposed) partition.
pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let cols = lambda.first().copied().unwrap_or(0) as usize;
    let mut out = vec![0u32; cols];
    for &row in lambda {
        for slot in out.iter_mut().take(row as usize) {
            *slot += 1;
        }
    }
    out
}
