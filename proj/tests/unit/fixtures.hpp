#pragma once

#include <string>

#include "goodsemi/io.hpp"

inline std::string data_path(const std::string& name) { return std::string(GOODSEMI_DATA_DIR) + "/" + name; }

inline goodsemi::GoodSemigroup load_ia(const std::string& name) { return goodsemi::load_semigroup(data_path(name), true); }
