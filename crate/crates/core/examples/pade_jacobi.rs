//! Jacobi polynomials with rational parameters and Padé forms of (1-x)^a (1+x)^b.

use dzpairs::polycore::rat::frac;
use dzpairs::specfun::{jacobi, jacobi_ode_residual, jacobi_residual_at_infinity, pade_form, weight_series, JacobiParams};

fn main() -> dzpairs::Result<()> {
    let params = JacobiParams::new(3, frac(-5, 3), frac(2, 3));
    let j = jacobi(&params);
    println!("J_3(-5/3, 2/3) = {j}");
    println!("ODE residual = {}", jacobi_ode_residual(&params, &j));
    println!("at infinity: {:?}\n", jacobi_residual_at_infinity(&params)?);

    let (a, b) = (frac(-5, 3), frac(1, 3));
    let (n, m) = (3, 2);
    let f = weight_series(&a, &b, n + m + 1);
    let form = pade_form(&f, n, m)?;
    println!("Padé ({n}, {m}) of (1-x)^(-5/3) (1+x)^(1/3):");
    println!("  p = {}", form.p);
    println!("  q = {}", form.q);
    Ok(())
}
