//! Classifying a few pixels and tracing the feasible region of the
//! purity/alpha plane.

use polsar_gd::classify::BoundaryCurve;
use polsar_gd::{
    coherency_from_kennaugh, grvm_kennaugh, params_for_pixel, sample_boundary, CoherencyMatrix,
    ElementaryTarget, Scheme,
};

fn main() -> polsar_gd::Result<()> {
    let pixels = [
        (
            "trihedral",
            coherency_from_kennaugh(&ElementaryTarget::Trihedral.kennaugh())?,
        ),
        (
            "dihedral",
            coherency_from_kennaugh(&ElementaryTarget::Dihedral.kennaugh())?,
        ),
        ("volume", coherency_from_kennaugh(&grvm_kennaugh(1.0)?)?),
        (
            "left helix",
            coherency_from_kennaugh(&ElementaryTarget::LeftHelix.kennaugh())?,
        ),
        ("uniform", CoherencyMatrix::identity()),
    ];
    for (name, t) in &pixels {
        let p = params_for_pixel(t)?;
        print!(
            "{name:<11} alpha {:6.2} tau {:5.2} P_GD {:.3} ->",
            p.alpha_gd, p.tau_gd, p.p_gd
        );
        for scheme in [Scheme::Tau, Scheme::Alpha, Scheme::PgdAlpha] {
            let label = scheme.label(&p)?;
            let legend = scheme.legend();
            let class = legend.iter().find(|l| l.0 == label).map_or("?", |l| l.1);
            print!("  {}={class}", scheme.name());
        }
        println!();
    }

    let points = sample_boundary(0.05)?;
    for curve in BoundaryCurve::ALL {
        let on_curve: Vec<_> = points.iter().filter(|p| p.curve == curve.name()).collect();
        let lowest = on_curve
            .iter()
            .min_by(|a, b| a.p_gd.total_cmp(&b.p_gd))
            .expect("sampled");
        println!(
            "curve {:<3} {} points, lowest P_GD {:.4} at alpha {:.2}",
            curve.name(),
            on_curve.len(),
            lowest.p_gd,
            lowest.alpha_gd
        );
    }
    Ok(())
}
