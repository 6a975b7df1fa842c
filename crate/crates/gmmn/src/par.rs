//! Data-parallel iteration through rayon, or plain iterators without the `parallel` feature.
//! Every call site collects in index order, so results do not depend on the thread count.

#[cfg(feature = "parallel")]
pub(crate) use rayon::prelude::*;

#[cfg(not(feature = "parallel"))]
pub(crate) trait IntoParallelIterator: IntoIterator + Sized {
    fn into_par_iter(self) -> Self::IntoIter {
        self.into_iter()
    }
}

#[cfg(not(feature = "parallel"))]
impl<T: IntoIterator> IntoParallelIterator for T {}

#[cfg(not(feature = "parallel"))]
pub(crate) trait ParallelSlice<T> {
    fn par_iter(&self) -> std::slice::Iter<'_, T>;
}

#[cfg(not(feature = "parallel"))]
impl<T> ParallelSlice<T> for [T] {
    fn par_iter(&self) -> std::slice::Iter<'_, T> {
        self.iter()
    }
}
