//! Scattering power factorization of a rotated dihedral, a volume and a
//! two-target mixture.

use polsar_gd::spff::{dominant_label, rgb_composite};
use polsar_gd::{
    coherency_from_kennaugh, grvm_kennaugh, rotate_kennaugh, CoherencyMatrix, ElementaryTarget,
    SpffConfig, SpffEngine,
};

fn show(engine: &SpffEngine, name: &str, t: &CoherencyMatrix) -> polsar_gd::Result<()> {
    let d = engine.factorize_coherency(t)?;
    println!(
        "{name}: span {:.3}, theta {:+.1}°, branch {:?}, best fit {}",
        d.span,
        d.theta_ms_deg,
        d.branch,
        d.best_target.name()
    );
    for c in &d.components {
        println!(
            "    {:<6} similarity {:.4}  power {:.4}",
            c.component.band_name(),
            c.similarity,
            c.power
        );
    }
    let rgb = rgb_composite(&d);
    println!(
        "    residue {:.4}  total {:.4}  rgb ({:.3}, {:.3}, {:.3})  dominant {}",
        d.residue,
        d.total(),
        rgb.r,
        rgb.g,
        rgb.b,
        dominant_label(&d).map_or("none", |g| g.name())
    );
    Ok(())
}

fn main() -> polsar_gd::Result<()> {
    let engine = SpffEngine::new(SpffConfig::default())?;

    let rotated = rotate_kennaugh(&ElementaryTarget::Dihedral.kennaugh(), 12f64.to_radians());
    show(
        &engine,
        "dihedral rotated by 12°",
        &coherency_from_kennaugh(&rotated.scaled(3.0))?,
    )?;
    show(
        &engine,
        "random volume",
        &coherency_from_kennaugh(&grvm_kennaugh(1.0)?)?,
    )?;

    let mix = ElementaryTarget::Trihedral
        .kennaugh()
        .add(&ElementaryTarget::Dihedral.kennaugh());
    show(
        &engine,
        "trihedral + dihedral",
        &coherency_from_kennaugh(&mix)?,
    )?;
    Ok(())
}
