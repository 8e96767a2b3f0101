#ifndef HEK_HEK_HPP
#define HEK_HEK_HPP

// Umbrella header.

#include "hek/error.hpp"
#include "hek/scalar.hpp"
#include "hek/lie.hpp"
#include "hek/uenv.hpp"
#include "hek/complex.hpp"
#include "hek/cohomology.hpp"
#include "hek/completion.hpp"
#include "hek/io.hpp"
#include "hek/verify.hpp"

#endif  // HEK_HEK_HPP
