#ifndef RINGNORM_RINGNORM_HPP
#define RINGNORM_RINGNORM_HPP

// Umbrella header: free-group words, the Chinese Rings arc words, the
// connection solver, and the relator norm and metric built on it.

#include "ringnorm/connection.hpp"
#include "ringnorm/norm.hpp"
#include "ringnorm/rings.hpp"
#include "ringnorm/sampling.hpp"
#include "ringnorm/word.hpp"

#endif  // RINGNORM_RINGNORM_HPP
