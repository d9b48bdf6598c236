import { Client } from "./api.js";
import { Explorer } from "./state.js";
import { mount } from "./dom.js";

const explorer = new Explorer(new Client(""));
mount(explorer, document.getElementById("app") as HTMLElement);
void explorer.loadWord("4 2 1 2 3 2 4");
