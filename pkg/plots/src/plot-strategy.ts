#!/usr/bin/env node
import { runPlotScript } from "./runner.js";
import { buildStrategyScan } from "./strategyScan.js";

process.exit(runPlotScript("plot-strategy", process.argv.slice(2), buildStrategyScan));
