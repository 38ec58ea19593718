#pragma once

#include "baric/algebra.hpp"
#include "baric/idempotents.hpp"
#include "baric/identities.hpp"
#include "baric/io.hpp"
#include "baric/linalg.hpp"
#include "baric/numberfield.hpp"
#include "baric/peirce.hpp"
#include "baric/report.hpp"
#include "baric/sympoly.hpp"
#include "baric/trains.hpp"
#include "baric/unipoly.hpp"
