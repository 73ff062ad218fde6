#ifndef QPOS_QPOS_HPP
#define QPOS_QPOS_HPP

#include <qpos/families.hpp>
#include <qpos/heine.hpp>
#include <qpos/oracle.hpp>
#include <qpos/parallel.hpp>
#include <qpos/positivity.hpp>
#include <qpos/series.hpp>
#include <qpos/triangular.hpp>
#include <qpos/verdict.hpp>

#endif
