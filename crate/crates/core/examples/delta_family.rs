//! The delta and its derivatives as inner analytic functions.
//!
//! Prints |w| along the radius through the center angle, where it blows up,
//! and the boundary value away from it, for the first few orders.
use inner_analytic::inner::{recover_real, RadiusSchedule};
use inner_analytic::point::{CirclePoint, DiskPoint};
use inner_analytic::singular::eulerian_table;
use inner_analytic::InnerFunction;

fn main() -> Result<(), inner_analytic::Error> {
    let t1 = CirclePoint::new(0.5);
    println!("Eulerian numbers used by the closed forms:\n{}", eulerian_table(4)?.format_triangle());
    for n in 0..4 {
        let w = InnerFunction::delta(n, t1)?;
        print!("n={n}  |w| on the ray:");
        for rho in [0.5, 0.9, 0.99] {
            print!(" {:>12.4e}", w.eval(DiskPoint::new(rho, t1.theta())?).norm());
        }
        let off = recover_real(&w, CirclePoint::new(2.0), &RadiusSchedule::default())?;
        println!("   boundary value at 2.0: {:.2e}", off.value);
    }
    Ok(())
}
