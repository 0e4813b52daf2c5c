#ifndef GP_THREADS_HPP
#define GP_THREADS_HPP

namespace gp {

// Worker count for the parallel kernels (match enumeration, batch
// application, batch canonicalization). 1 selects the serial reference
// path. Thread count never changes results or their order.
void set_thread_count(int n);
int thread_count();

} // namespace gp

#endif
