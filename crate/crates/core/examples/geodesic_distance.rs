//! Geodesic distance between scatterers in each representation.

use num_complex::Complex64;
use polsar_gd::{
    gd_coherency, gd_kennaugh, gd_scattering, kennaugh_from_scattering, CoherencyMatrix,
    ElementaryTarget, ScatteringMatrix,
};

fn main() -> polsar_gd::Result<()> {
    let targets = ElementaryTarget::ALL;
    print!("{:>5}", "");
    for t in targets {
        print!("{:>7}", t.short_name());
    }
    println!();
    for a in targets {
        print!("{:>5}", a.short_name());
        for b in targets {
            print!(
                "{:>7.3}",
                gd_kennaugh(&a.kennaugh(), &b.kennaugh())?.value()
            );
        }
        println!();
    }

    let s1 = ScatteringMatrix::new(
        Complex64::new(1.0, 0.2),
        Complex64::new(0.1, -0.3),
        Complex64::new(-0.4, 0.5),
    )?;
    let s2 = ScatteringMatrix::real(1.0, 0.0, 1.0)?;
    let from_s = gd_scattering(&s1, &s2)?;
    let from_k = gd_kennaugh(
        &kennaugh_from_scattering(&s1),
        &kennaugh_from_scattering(&s2),
    )?;
    let from_t = gd_coherency(
        &CoherencyMatrix::from_scattering(&s1),
        &CoherencyMatrix::from_scattering(&s2),
    )?;
    println!(
        "\nS-form {:.15}\nK-form {:.15}\nT-form {:.15}",
        from_s.value(),
        from_k.value(),
        from_t.value()
    );
    println!("similarity {:.6}", from_k.similarity().value());
    Ok(())
}
