use super::IntPoly;

/// `f_k = f_{d-k}` for `d = low_degree + degree`.
///
/// The zero polynomial counts as palindromic, so that `N_1 = 0` qualifies.
pub fn is_palindromic(f: &IntPoly) -> bool {
    let (Some(lo), Some(hi)) = (f.low_degree(), f.degree()) else {
        return true;
    };
    let window = &f.coeffs()[lo..=hi];
    window.iter().eq(window.iter().rev())
}

/// Coefficients on the window `[low_degree, degree]` weakly rise and then
/// weakly fall. Zero coefficients inside the window are part of the sequence;
/// the zero polynomial counts as unimodal.
pub fn is_unimodal(f: &IntPoly) -> bool {
    let (Some(lo), Some(hi)) = (f.low_degree(), f.degree()) else {
        return true;
    };
    let window = &f.coeffs()[lo..=hi];
    let mut falling = false;
    for pair in window.windows(2) {
        if pair[1] < pair[0] {
            falling = true;
        } else if falling && pair[1] > pair[0] {
            return false;
        }
    }
    true
}
