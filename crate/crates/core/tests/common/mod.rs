//! Oracles shared by the integration tests.

#![allow(dead_code)]

/// Clauses that fail on a given grid point, from direct hand computation
/// of the brackets `[f_{1,p-1}, g_{p-1,0}]`, `[f_{e+1,p-1}, g_{e,1}]` and of
/// which classes `z·D` can reach.
pub fn failing_clauses(p: usize, e: usize) -> Vec<&'static str> {
    let mut out = vec![];
    if e == p - 1 {
        out.push("thm1.1.v.soc_in_center");
    }
    out.push("thm1.1.vi.jz_l");
    out.push("thm1.1.vii.center_dim");
    if 2 * e + 1 != p {
        out.push("thm1.1.vii.center_basis");
    }
    if e == p - 1 {
        out.push("thm1.1.vii.abelian");
    }
    out
}

/// Pairs `[f_{a,b}, g_{c,d}]` in `X` with `a+c > p-1` or `b+d > p-1` whose
/// bracket is nonzero. The bracket is `-b f_{a+c,b+d-1} + c g_{a+c-1,b+d}`
/// with out-of-range terms dropped, so it vanishes iff each surviving term
/// has a zero coefficient.
pub fn vanishing_relation_failures(p: usize, e: usize) -> Vec<String> {
    use qci_core::derivation::{basis_x_ids, MonomialKind};
    let ids = basis_x_ids(p, e);
    let mut out = vec![];
    for u in ids.iter().filter(|u| u.kind == MonomialKind::F) {
        for v in ids.iter().filter(|v| v.kind == MonomialKind::G) {
            let (a, b, c, d) = (u.a, u.b, v.a, v.b);
            if a + c < p && b + d < p {
                continue;
            }
            let f_term = b % p != 0 && a + c < p && b + d >= 1 && b + d - 1 < p;
            let g_term = c % p != 0 && a + c >= 1 && a + c - 1 < p && b + d < p;
            if f_term || g_term {
                out.push(format!("[{u}, {v}]"));
            }
        }
    }
    out
}
