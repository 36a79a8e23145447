#pragma once

#define FTLAT_VERSION "0.1.0"
