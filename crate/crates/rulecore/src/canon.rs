use crate::State;

/// Lexicographically least circular rotation of `ctx` (order `B < W`).
///
/// Booth's least-rotation algorithm; linear in the context length.
pub fn canonical_form(ctx: &[State]) -> Vec<State> {
    let n = ctx.len();
    if n == 0 {
        return Vec::new();
    }
    let start = least_rotation(ctx);
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&ctx[start..]);
    out.extend_from_slice(&ctx[..start]);
    out
}

fn least_rotation(s: &[State]) -> usize {
    let n = s.len();
    let at = |i: usize| s[i % n];
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != usize::MAX && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && sj != at(k) {
            // i == -1 in the textbook formulation
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = if i == usize::MAX { 0 } else { i + 1 };
        }
    }
    k % n
}

/// True when `b` is a circular rotation of `a`.
pub fn is_rotation_of(a: &[State], b: &[State]) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}
