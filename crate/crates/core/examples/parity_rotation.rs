//! Parity split and rotation of inner analytic functions.
use inner_analytic::point::{CirclePoint, DiskPoint};
use inner_analytic::singular::delta_parity_parts;
use inner_analytic::InnerFunction;

fn main() -> Result<(), inner_analytic::Error> {
    let t1 = CirclePoint::new(0.7);
    let (even, odd) = delta_parity_parts(t1);
    let d = InnerFunction::delta(0, t1)?;
    for t in [0.3, 1.5, 2.8] {
        let p = DiskPoint::new(0.9, t)?;
        println!(
            "t={t}: delta {:+.6}  even part {:+.6}  odd part {:+.6}",
            d.eval(p),
            even.eval(p),
            odd.eval(p)
        );
    }
    let rotated = d.rotate(CirclePoint::new(1.0));
    let p = DiskPoint::new(0.9, 1.2)?;
    println!(
        "rotated by 1.0: {:+.9}, delta centered at 1.7: {:+.9}",
        rotated.eval(p),
        InnerFunction::delta(0, CirclePoint::new(1.7))?.eval(p)
    );
    Ok(())
}
