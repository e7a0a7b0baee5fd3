#pragma once

#include <doctest.h>

#include "cullis/error.hpp"

// Code of the cullis::Error thrown by `f`, failing the test if nothing is thrown.
template <class F>
cullis::Errc error_of(F&& f) {
    try {
        f();
    } catch (const cullis::Error& e) {
        return e.code();
    }
    FAIL("no cullis::Error thrown");
    return cullis::Errc::Parse;
}
