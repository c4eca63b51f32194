#pragma once

#include "sturmian/characteristic.hpp"
#include "sturmian/christoffel.hpp"
#include "sturmian/depth.hpp"
#include "sturmian/fraction.hpp"
#include "sturmian/morphism.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/standard.hpp"
#include "sturmian/verify.hpp"
#include "sturmian/word.hpp"
