#!/usr/bin/env node
import { buildMertensGrowth } from "./mertensGrowth.js";
import { runPlotScript } from "./runner.js";

process.exit(runPlotScript("plot-mertens", process.argv.slice(2), buildMertensGrowth));
