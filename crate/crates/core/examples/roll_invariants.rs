//! Roll-invariant angles of the elementary targets, and their insensitivity
//! to antenna rotation.

use polsar_gd::commands::target_angles;
use polsar_gd::{params_for_kennaugh, rotate_kennaugh, ElementaryTarget};

fn main() -> polsar_gd::Result<()> {
    println!("{:<20} {:>9} {:>9}", "target", "alpha_gd", "tau_gd");
    for (t, alpha, tau) in target_angles()? {
        println!("{:<20} {alpha:>9.2} {tau:>9.2}", t.name());
    }

    let k = ElementaryTarget::NarrowDihedral.kennaugh();
    println!("\nnarrow dihedral under rotation:");
    for deg in [0.0, 10.0, 30.0, 60.0] {
        let p = params_for_kennaugh(&rotate_kennaugh(&k, f64::to_radians(deg)))?;
        println!(
            "  {deg:>4}°  alpha {:.6}  tau {:.6}  P_GD {:.6}  P_D {:.6}",
            p.alpha_gd, p.tau_gd, p.p_gd, p.p_d
        );
    }
    Ok(())
}
