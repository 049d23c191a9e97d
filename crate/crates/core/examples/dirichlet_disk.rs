//! Dirichlet problem on the unit disk with regular and singular boundary data.
use inner_analytic::corpus;
use inner_analytic::dirichlet::{harmonic_conjugate, laplace_residual, poisson_integral, solve, BoundaryCondition, LaplaceGrid};
use inner_analytic::point::{CirclePoint, DiskPoint};
use inner_analytic::singular::DeltaTerm;

fn main() -> Result<(), inner_analytic::Error> {
    let f = corpus::sampler("square").unwrap();
    let field = solve(&BoundaryCondition::regular(f.clone()), 1024, 1 << 14)?;
    for (rho, t) in [(0.0, 0.0), (0.5, 1.0), (0.9, -2.0)] {
        let p = DiskPoint::new(rho, t)?;
        let c = harmonic_conjugate(&field, p)?;
        println!(
            "u({rho}, {t}) = {:+.10}  poisson = {:+.10}  conjugate = {:+.6}",
            field.value(p),
            poisson_integral(&f, p, 1 << 14)?,
            c.series
        );
    }

    // a point charge on the boundary plus a dipole
    let bc = BoundaryCondition {
        deltas: vec![DeltaTerm::new(0, CirclePoint::new(0.0), 1.0), DeltaTerm::new(1, CirclePoint::new(2.0), 0.2)],
        ..Default::default()
    };
    let singular = solve(&bc, 64, 256)?;
    let residual = laplace_residual(&singular, LaplaceGrid { rho_max: 0.8, n_rho: 8, n_theta: 16 })?;
    println!("value at the origin {:.10}, Laplacian residual {residual:.2e}", singular.value(DiskPoint::origin()));
    Ok(())
}
