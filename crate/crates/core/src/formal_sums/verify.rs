use super::config::{ColoredConfig, LabelledConfig, BASEPOINT_LABEL};
use super::maps::{diag, phi, phi_component, psi, psi_component, scan, triangle};
use super::multimap::{color_forget_cover, cover_inverse};
use super::{FormalSum, Pointed};
use crate::report::{Report, Tally};

/// Every configuration on points `0..size` with labels drawn from
/// `{none, 0, 1}`, plus two degenerate ones.
pub(crate) fn sample_configs(size: usize) -> Vec<LabelledConfig> {
    let mut out = Vec::new();
    let combos = 3usize.pow(size as u32);
    for code in 0..combos {
        let mut xi = LabelledConfig::new(0..size as u32);
        let mut c = code;
        for p in 0..size as u32 {
            match c % 3 {
                1 => xi = xi.with_label(p, 0),
                2 => xi = xi.with_label(p, 1),
                _ => {}
            }
            c /= 3;
        }
        out.push(xi);
    }
    if size > 0 {
        out.push(LabelledConfig::new(0..size as u32).with_label(0, BASEPOINT_LABEL));
        out.push(LabelledConfig::new(0..size as u32).with_m0(size as u32 - 1));
    }
    out
}

/// Checks `Ψ(σ(ξ)) = (σ △ σ)(Δ(ξ))` for every sampled configuration with at
/// most `max_size` points.
pub fn verify_psi_sigma_identity(max_size: usize) -> Report {
    let mut tally = Tally::default();
    for size in 0..=max_size {
        for xi in sample_configs(size) {
            let lhs = scan(&xi).flat_map(psi);
            let d = diag(&xi);
            let rhs = if d.is_basepoint() {
                FormalSum::empty()
            } else {
                triangle(&scan(&d.0), &scan(&d.1))
            };
            tally.check(lhs == rhs, || format!("{xi:?}: Ψσ = {lhs:?}, (σ△σ)Δ = {rhs:?}"));
        }
    }
    let mut report = Report::new();
    tally.into_report(&mut report, format!("psi-sigma identity, |I| <= {max_size}"));
    report
}

/// The full set-level suite: the `Ψσ` identity up to `max_size` points and
/// the component identities up to six points.
pub fn verify_formal_suite(max_size: usize) -> Report {
    const MAX_P: usize = 6;
    let mut report = verify_psi_sigma_identity(max_size);
    let configs: Vec<LabelledConfig> = (0..=MAX_P)
        .flat_map(|p| {
            let plain = LabelledConfig::new(0..p as u32);
            let labelled = if p > 0 { plain.clone().with_label(0, 1) } else { plain.clone() };
            [plain, labelled]
        })
        .collect();

    let mut equal = Tally::default();
    let mut vanish = Tally::default();
    let mut reassemble = Tally::default();
    let mut counts = Tally::default();
    for xi in &configs {
        let p = xi.len();
        for q in 0..=p {
            for r in 0..=p {
                let f = phi_component(p, q, r, xi).expect("size matches");
                let g = psi_component(p, q, r, xi).expect("size matches");
                if q + r == p && q > 0 && r > 0 {
                    equal.check(f == g, || format!("({p},{q},{r}) on {xi:?}: {f:?} vs {g:?}"));
                }
                if q + r < p {
                    vanish.check(f.is_empty() && g.is_empty(), || format!("({p},{q},{r}) on {xi:?}"));
                }
                if q + r != p {
                    vanish.check(f.is_empty(), || format!("phi ({p},{q},{r}) on {xi:?} = {f:?}"));
                }
            }
        }
        let mut phi_sum = FormalSum::empty();
        let mut psi_sum = FormalSum::empty();
        for q in 1..=p {
            phi_sum = phi_sum.add(&phi_component(p, q, p - q, xi).expect("size matches"));
            for r in 1..=p {
                psi_sum = psi_sum.add(&psi_component(p, q, r, xi).expect("size matches"));
            }
        }
        reassemble.check(phi_sum == phi(xi) && psi_sum == psi(xi), || format!("{xi:?}"));
        if p > 0 {
            let phi_n = phi(xi).len() as u64;
            let psi_n = psi(xi).len() as u64;
            let want_phi = (1u64 << p) - 2;
            let want_psi = 3u64.pow(p as u32) - 2;
            counts.check(phi_n == want_phi && psi_n == want_psi, || {
                format!("|I| = {p}: phi has {phi_n} terms (want {want_phi}), psi has {psi_n} (want {want_psi})")
            });
        }
    }
    equal.into_report(&mut report, format!("phi = psi components for p = q + r <= {MAX_P}"));
    vanish.into_report(&mut report, format!("components vanish off p = q + r, p <= {MAX_P}"));
    reassemble.into_report(&mut report, "components reassemble phi and psi");
    counts.into_report(&mut report, "term counts 2^n - 2 and 3^n - 2");

    let mut composite = Tally::default();
    for total in 1..=4usize {
        let configs = sample_configs(total);
        for n in 0..=total {
            let cover = color_forget_cover(&configs, n);
            let (inv, deg) = match cover_inverse(&cover, configs.clone()) {
                Ok(v) => v,
                Err(e) => {
                    composite.check(false, || format!("({n},{}): {e}", total - n));
                    continue;
                }
            };
            let want = binomial(total, n);
            composite.check(deg as u64 == want, || format!("({n},{}): degree {deg}, want {want}", total - n));
            for xi in inv.domain() {
                let back = cover.forward(&inv.apply(xi));
                let expect = FormalSum::singleton(xi.clone()).times(deg as u64);
                composite.check(back == expect, || format!("{xi:?}: p(p^-1) = {back:?}"));
                let via_span = inv.span_value(xi).expect("span presented");
                composite.check(via_span == inv.apply(xi), || format!("{xi:?}: span disagrees"));
            }
        }
    }
    composite.into_report(&mut report, "cover inverse then projection = degree x identity");

    let xi = LabelledConfig::new([0, 1]);
    let (inv, _) = cover_inverse(&color_forget_cover(std::slice::from_ref(&xi), 1), vec![xi.clone()])
        .expect("two colorings");
    let expected: FormalSum<ColoredConfig> = ColoredConfig::colorings(&xi, 1).into_iter().collect();
    let mut colors = Tally::default();
    colors.check(inv.apply(&xi) == expected && expected.len() == 2, || format!("{:?}", inv.apply(&xi)));
    colors.into_report(&mut report, "color-forgetting inverse on two points");
    report
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = verify_formal_suite(4);
        assert!(r.passed(), "{r}");
        assert!(verify_psi_sigma_identity(0).passed());
    }

    #[test]
    fn two_point_sides_have_nine_terms() {
        // 4 x 4 pairs of subsets of {1,2}; the 7 with an empty side are absorbed
        let xi = LabelledConfig::new([1, 2]);
        let lhs = scan(&xi).flat_map(psi);
        let d = diag(&xi);
        let rhs = triangle(&scan(&d.0), &scan(&d.1));
        assert_eq!(lhs.total(), 9);
        assert_eq!(rhs.total(), 9);
        assert_eq!(lhs, rhs);
    }
}
