#pragma once

// Seed plumbing for the randomized suites: every suite accepts --seed=N and
// falls back to its fixed per-case seed otherwise.

namespace testsupport {

extern unsigned seed_override;
extern bool seed_overridden;

inline unsigned seed(unsigned fallback)
{
    return seed_overridden ? seed_override : fallback;
}

} // namespace testsupport
