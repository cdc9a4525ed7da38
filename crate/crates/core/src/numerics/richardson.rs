/// One Richardson step for a quantity with leading error `C h^order`.
///
/// `ratio` is the step-size ratio `h_coarse / h_fine`.
pub fn richardson(coarse: f64, fine: f64, order: u32, ratio: f64) -> f64 {
    let factor = ratio.powi(order as i32);
    (factor * fine - coarse) / (factor - 1.0)
}
