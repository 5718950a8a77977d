import { App } from "./app";
import { Client } from "./api";
import "./style.css";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");
void new App(root, new Client()).init();
