//! Moving up and down the chain of a function.
use inner_analytic::chains::{chain_element, classify_chain, ChainIndex};
use inner_analytic::corpus;
use inner_analytic::fourier::coefficients;
use inner_analytic::point::CirclePoint;
use inner_analytic::{make_series, InnerFunction};

fn main() -> Result<(), inner_analytic::Error> {
    let sq = coefficients(&corpus::sampler("square").unwrap(), 256, 1 << 12)?;
    let w = make_series(sq.clone());
    for m in -2..=2 {
        let c = chain_element(&w, ChainIndex(m))?.coefficient_view()?;
        println!("square wave, index {m:+}: |c_1| = {:.6}, |c_3| = {:.6}, growth {:?}", c.get(1).norm(), c.get(3).norm(), c.growth_class()?);
    }
    println!("square wave chain: {:?}", classify_chain(&sq)?);
    let smooth = coefficients(&corpus::sampler("exp_cos").unwrap(), 64, 1024)?;
    println!("exp(cos t) chain: {:?}", classify_chain(&smooth)?);

    // the delta's chain keeps its singular point at every step
    let d = InnerFunction::delta(0, CirclePoint::new(1.0))?;
    for m in 0..3 {
        println!("delta chain index {m}: singular at {:?}", chain_element(&d, ChainIndex(m))?.singular_angles());
    }
    Ok(())
}
